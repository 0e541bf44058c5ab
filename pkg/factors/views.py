import logging

from rest_framework import generics, status
from rest_framework.response import Response
from rest_framework.views import APIView

from .exceptions import BudgetExhausted, GraphError, InconsistencyError
from .serializers import (CheckInputSerializer, GraphAnalysisSerializer, GraphInputSerializer,
                          HypothesisReportSerializer, SharpnessReportSerializer)
from .services import CONSTRUCTIONS, AnalysisService, HypothesisService, SharpnessService

logger = logging.getLogger(__name__)


def error_response(exc: Exception) -> Response:
    """Map toolkit errors onto HTTP statuses"""
    if isinstance(exc, GraphError):
        code = status.HTTP_400_BAD_REQUEST
    elif isinstance(exc, BudgetExhausted):
        code = status.HTTP_503_SERVICE_UNAVAILABLE
    else:
        logger.error(f"[API] {type(exc).__name__}: {exc}")
        code = status.HTTP_500_INTERNAL_SERVER_ERROR
    return Response({'detail': str(exc)}, status=code)


class AnalyzeView(generics.GenericAPIView):
    """
    Analyze one graph.

    POST /api/analyze/
    {
        "graph": "Bw",
        "format": "graph6"
    }
    """
    serializer_class = GraphInputSerializer

    def post(self, request, *args, **kwargs):
        serializer = self.get_serializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)

        try:
            analysis = AnalysisService.analyze(serializer.validated_data['parsed'])
        except (GraphError, BudgetExhausted, InconsistencyError) as e:
            return error_response(e)
        return Response(GraphAnalysisSerializer(analysis).data, status=status.HTTP_200_OK)


class CheckView(generics.GenericAPIView):
    """
    Evaluate the hypothesis of a sufficient condition.

    POST /api/check/
    {
        "theorem": "thm14",
        "graph": "...",
        "k": 1,
        "gamma": "1/3"
    }
    """
    serializer_class = CheckInputSerializer

    def post(self, request, *args, **kwargs):
        serializer = self.get_serializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)

        data = serializer.validated_data
        try:
            report = HypothesisService.check(data['theorem'], data['parsed'], data['params'])
        except (GraphError, InconsistencyError) as e:
            return error_response(e)
        return Response(HypothesisReportSerializer(report).data, status=status.HTTP_200_OK)


class DemoView(APIView):
    """
    Run a sharpness construction.

    GET /api/demo/remark1/?t=0
    GET /api/demo/remark2/?k=1&b=1&full=false
    """

    @staticmethod
    def _int_param(request, name, default=None):
        raw = request.query_params.get(name)
        if raw is None:
            return default
        try:
            return int(raw)
        except ValueError:
            raise GraphError(f"Query parameter {name} must be an integer, got {raw!r}")

    def get(self, request, construction):
        if construction not in CONSTRUCTIONS:
            return Response({'detail': f'Unknown construction {construction}'},
                            status=status.HTTP_404_NOT_FOUND)
        try:
            full = request.query_params.get('full')
            report = SharpnessService.sharpness_demo(
                construction,
                t=self._int_param(request, 't', 0),
                k=self._int_param(request, 'k', 1),
                b=self._int_param(request, 'b'),
                full_check=None if full is None else full.lower() in ('1', 'true', 'yes'),
            )
        except (GraphError, BudgetExhausted, InconsistencyError) as e:
            return error_response(e)
        return Response(SharpnessReportSerializer(report).data, status=status.HTTP_200_OK)
