from fractions import Fraction

from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from .conf import path_factor_setting
from .exceptions import GraphError
from .graphs import parse_edge_list, parse_graph6
from .parameters import Thm14Params, parse_rational


def exact(value):
    """Fractions travel as 'p/q' strings so no value is ever rounded"""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {key: exact(v) for key, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(v) for v in value]
    return value


def render_json(data) -> str:
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode()


class ExactField(serializers.Field):
    def __init__(self, **kwargs):
        kwargs['read_only'] = True
        super().__init__(**kwargs)

    def to_representation(self, value):
        return exact(value)


class VertexSetField(ExactField):
    def to_representation(self, value):
        return value.to_list()


class EdgeField(ExactField):
    def to_representation(self, value):
        return list(value)


class SchemaVersionMixin(serializers.Serializer):
    schema_version = serializers.SerializerMethodField()

    def get_schema_version(self, obj):
        return path_factor_setting('REPORT_SCHEMA_VERSION')


# ===== Input =====

class GraphInputSerializer(serializers.Serializer):
    """A graph as graph6 text or as an 'n m' edge list"""
    graph = serializers.CharField(trim_whitespace=False)
    format = serializers.ChoiceField(choices=['graph6', 'edge_list'], default='graph6')

    def validate(self, data):
        try:
            if data['format'] == 'edge_list':
                data['parsed'] = parse_edge_list(data['graph'])
            else:
                data['parsed'] = parse_graph6(data['graph'].strip())
        except GraphError as e:
            raise serializers.ValidationError({'graph': [str(e)]})
        return data


class CheckInputSerializer(GraphInputSerializer):
    theorem = serializers.ChoiceField(choices=['thm13', 'thm14'])
    k = serializers.IntegerField(required=False, min_value=1)
    gamma = serializers.CharField(required=False)

    def validate(self, data):
        data = super().validate(data)
        data['params'] = None
        if data['theorem'] == 'thm14':
            if 'k' not in data or 'gamma' not in data:
                raise serializers.ValidationError({'detail': ['thm14 needs k and gamma']})
            try:
                data['params'] = Thm14Params(data['k'], parse_rational(data['gamma']))
            except GraphError as e:
                raise serializers.ValidationError({'gamma': [str(e)]})
        return data


# ===== Output =====

class HypothesisCheckSerializer(serializers.Serializer):
    name = serializers.CharField(read_only=True)
    required = ExactField()
    actual = ExactField()
    passed = serializers.BooleanField(read_only=True)


class HypothesisReportSerializer(SchemaVersionMixin):
    theorem = serializers.CharField(read_only=True)
    satisfied = serializers.BooleanField(read_only=True)
    checks = HypothesisCheckSerializer(many=True, read_only=True)
    witness = VertexSetField(allow_null=True)
    parameters = ExactField()
    notes = serializers.ListField(child=serializers.CharField(), read_only=True)


class GraphAnalysisSerializer(SchemaVersionMixin):
    graph6 = serializers.CharField(read_only=True)
    n = serializers.IntegerField(read_only=True)
    m = serializers.IntegerField(read_only=True)
    delta = serializers.IntegerField(read_only=True)
    alpha = serializers.IntegerField(read_only=True)
    kappa = serializers.IntegerField(read_only=True, allow_null=True)
    two_edge_connected = serializers.BooleanField(read_only=True)
    isolated_vertices = serializers.IntegerField(read_only=True)
    components = serializers.IntegerField(read_only=True)
    sun_components = serializers.IntegerField(read_only=True)
    has_p3_factor = serializers.BooleanField(read_only=True)
    covered = serializers.BooleanField(read_only=True)
    uniform = serializers.BooleanField(read_only=True)
    witnesses = ExactField()
    search_nodes = serializers.IntegerField(read_only=True)


class ValidationReportSerializer(SchemaVersionMixin):
    theorem = serializers.CharField(read_only=True)
    parameters = ExactField()
    graphs_examined = serializers.IntegerField(read_only=True)
    hypothesis_hits = serializers.IntegerField(read_only=True)
    counterexamples = serializers.ListField(child=serializers.CharField(), read_only=True)
    disagreements = ExactField()
    budget_exhausted = serializers.ListField(child=serializers.CharField(), read_only=True)
    search_nodes = serializers.IntegerField(read_only=True)
    searches = serializers.IntegerField(read_only=True)
    wall_time_seconds = serializers.FloatField(read_only=True)
    notes = serializers.ListField(child=serializers.CharField(), read_only=True)
    passed = serializers.BooleanField(read_only=True)


class IdentitySerializer(serializers.Serializer):
    name = serializers.CharField(read_only=True)
    expected = ExactField()
    actual = ExactField()
    holds = serializers.BooleanField(read_only=True)


class SharpnessReportSerializer(SchemaVersionMixin):
    construction = serializers.CharField(read_only=True)
    parameters = ExactField()
    graph6 = serializers.CharField(read_only=True)
    n = serializers.IntegerField(read_only=True)
    m = serializers.IntegerField(read_only=True)
    deleted_edge = EdgeField()
    witness_x = VertexSetField()
    sun_count = serializers.IntegerField(read_only=True)
    epsilon = serializers.IntegerField(read_only=True)
    bound = serializers.IntegerField(read_only=True)
    hypothesis = HypothesisReportSerializer(read_only=True)
    identities = IdentitySerializer(many=True, read_only=True)
    mode = serializers.CharField(read_only=True)
    criterion_holds_after_deletion = serializers.BooleanField(read_only=True, allow_null=True)
    uniform = serializers.BooleanField(read_only=True, allow_null=True)
    non_uniform_edge = EdgeField(allow_null=True)
    verdict = serializers.CharField(read_only=True)
