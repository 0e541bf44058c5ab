from django.urls import path

from .views import AnalyzeView, CheckView, DemoView

urlpatterns = [
    path('analyze/', AnalyzeView.as_view(), name='analyze'),
    path('check/', CheckView.as_view(), name='check'),
    path('demo/<str:construction>/', DemoView.as_view(), name='demo'),
]
