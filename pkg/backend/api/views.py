import logging

from rest_framework import status, viewsets
from rest_framework.decorators import action
from rest_framework.exceptions import NotFound, ValidationError
from rest_framework.response import Response
from rest_framework.views import APIView

from core.exceptions import NotRealRootedError, PolyrecError
from moments.report import moment_report
from recurrences.engine import generate
from recurrences.families import (PARAMETERS, FamilyId, FamilyTag, builtin,
                                  builtin_families)
from roots.isolation import isolate
from tableaux.statistics import statistic_distribution

from .paginators import CustomLimitPagination
from .serializers import (DistributionQuerySerializer,
                          FamilyQuerySerializer, IndexedPolynomialSerializer,
                          MomentReportSerializer, MomentsQuerySerializer,
                          PolynomialsQuerySerializer, RecurrenceSpecSerializer,
                          RootCertificateSerializer, RootsQuerySerializer,
                          StatisticDistributionSerializer)

logger = logging.getLogger(__name__)


class PolyrecErrorMixin:
    """Ошибки вычислений отдаются клиенту как 400 Bad Request."""

    def handle_exception(self, exc):
        if isinstance(exc, PolyrecError):
            logger.info('%s: %s', type(exc).__name__, exc)
            exc = ValidationError({'errors': str(exc)})
        return super().handle_exception(exc)


class FamilyViewSet(PolyrecErrorMixin, viewsets.GenericViewSet):
    """Вьюсет встроенных семейств. Доступен только для чтения.
    - URL: /families/{family}/polynomials/ - первые nmax многочленов.
    - URL: /families/{family}/moments/ - факториальные моменты P_n.
    - URL: /families/{family}/roots/ - отделение корней P_n.
    """

    lookup_field = 'family'
    lookup_value_regex = '[A-Za-z_-]+'
    pagination_class = CustomLimitPagination

    def get_query(self, serializer_class):
        serializer = serializer_class(data=self.request.query_params)
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data

    def get_spec(self, query):
        name = self.kwargs['family'].upper().replace('-', '_')
        if name not in FamilyTag.values:
            raise NotFound(f'Семейство {self.kwargs["family"]} не найдено.')
        params = {key: query[key]
                  for key in PARAMETERS.get(FamilyTag(name), ())
                  if key in query}
        return builtin(FamilyId.parse(name, **params))

    def list(self, request):
        data = [{'tag': tag,
                 'description': FamilyTag(tag).label,
                 'parameters': PARAMETERS.get(FamilyTag(tag), ()),
                 'spec': RecurrenceSpecSerializer(spec).data}
                for tag, spec in builtin_families().items()]
        return Response(data, status=status.HTTP_200_OK)

    def retrieve(self, request, family=None):
        spec = self.get_spec(self.get_query(FamilyQuerySerializer))
        return Response(RecurrenceSpecSerializer(spec).data,
                        status=status.HTTP_200_OK)

    @action(detail=True, methods=['GET'])
    def polynomials(self, request, family=None):
        """Многочлены P_0, ..., P_nmax с пагинацией."""
        query = self.get_query(PolynomialsQuerySerializer)
        spec = self.get_spec(query)
        sequence = [{'n': n, 'polynomial': p}
                    for n, p in enumerate(generate(spec, query['nmax']))]
        page = self.paginate_queryset(sequence)
        serializer = IndexedPolynomialSerializer(page, many=True)
        return self.get_paginated_response(serializer.data)

    @action(detail=True, methods=['GET'])
    def moments(self, request, family=None):
        query = self.get_query(MomentsQuerySerializer)
        spec = self.get_spec(query)
        n = query['n']
        report = moment_report(generate(spec, n)[n], query['rmax'], n=n)
        return Response(MomentReportSerializer(report).data,
                        status=status.HTTP_200_OK)

    @action(detail=True, methods=['GET'])
    def roots(self, request, family=None):
        """Сертификат корней; при невещественных корнях real_rooted=False."""
        query = self.get_query(RootsQuerySerializer)
        spec = self.get_spec(query)
        n = query['n']
        try:
            certificate = isolate(generate(spec, n)[n], query.get('eps'))
        except NotRealRootedError as error:
            certificate = error.certificate
        return Response(RootCertificateSerializer(certificate).data,
                        status=status.HTTP_200_OK)


class TableauxDistributionView(PolyrecErrorMixin, APIView):
    """Гистограмма статистики древовидных таблиц.
    - URL: /tableaux/distribution/?stat=&n=&symmetric=.
    """

    def get(self, request):
        query = DistributionQuerySerializer(data=request.query_params)
        query.is_valid(raise_exception=True)
        distribution = statistic_distribution(
            query.validated_data['stat'], query.validated_data['n'],
            query.validated_data['symmetric'])
        return Response(StatisticDistributionSerializer(distribution).data,
                        status=status.HTTP_200_OK)
