from django.urls import include, path
from rest_framework.routers import DefaultRouter

from .views import FamilyViewSet, TableauxDistributionView

app_name = 'api'

router_v1 = DefaultRouter()
router_v1.register('families', FamilyViewSet, basename='families')

urlpatterns = [
    path('tableaux/distribution/', TableauxDistributionView.as_view(),
         name='tableaux-distribution'),
    path('', include(router_v1.urls)),
]
