from fractions import Fraction

from rest_framework import serializers
from rest_framework.exceptions import ValidationError

from core.choices import Form, NormalizationKind, Statistic
from core.constans import API_NMAX_LIMIT, API_ROOTS_N_LIMIT, DEFAULT_RMAX
from core.exceptions import PolyrecError
from polynomials.polynomial import Polynomial
from polynomials.rational import format_rational, to_rational
from recurrences.specs import Normalization, RecurrenceSpec
from recurrences.symbolic import SymbolicCoefficient


class RationalField(serializers.Field):
    """Точное рациональное число в виде строки "num/den"."""

    default_error_messages = {
        'invalid': 'Ожидается рациональное число вида "p/q".',
    }

    def to_representation(self, value):
        return format_rational(Fraction(value))

    def to_internal_value(self, data):
        try:
            return to_rational(data)
        except (TypeError, ValueError, ZeroDivisionError):
            self.fail('invalid')


class NumberField(RationalField):
    """Рациональное число строкой, число с плавающей точкой - как есть."""

    def to_representation(self, value):
        if isinstance(value, float):
            return value
        return super().to_representation(value)


class PolynomialField(serializers.Field):
    """Многочлен как список коэффициентов по возрастанию степени."""

    default_error_messages = {
        'invalid': 'Ожидается список рациональных коэффициентов.',
    }

    def to_representation(self, value):
        return value.to_strings()

    def to_internal_value(self, data):
        if not isinstance(data, list):
            self.fail('invalid')
        try:
            return Polynomial.from_coefficients(data)
        except (TypeError, ValueError, ZeroDivisionError):
            self.fail('invalid')


class SymbolicCoefficientField(serializers.Field):
    """Коэффициент f_n(x) или g_n(x): строка k - многочлен от n при x^k."""

    default_error_messages = {
        'invalid': 'Ожидается список списков рациональных чисел.',
    }

    def to_representation(self, value):
        return value.to_rows()

    def to_internal_value(self, data):
        if not isinstance(data, list) or not all(
                isinstance(row, list) for row in data):
            self.fail('invalid')
        try:
            return SymbolicCoefficient.from_rows(data)
        except (TypeError, ValueError, ZeroDivisionError):
            self.fail('invalid')


class NormalizationSerializer(serializers.Serializer):
    """Правило нормировки P_n(1)."""

    kind = serializers.ChoiceField(choices=NormalizationKind.choices)
    params = serializers.DictField(required=False, default=dict)

    def to_representation(self, instance):
        return {'kind': str(instance.kind), 'params': instance.params()}


class RecurrenceSpecSerializer(serializers.Serializer):
    """Сериализатор рекуррентности.
    Признак g_vanishes_at_one только выводится: при чтении файла
    он вычисляется заново.
    """

    name = serializers.CharField(required=False, allow_blank=True,
                                 default='')
    form = serializers.ChoiceField(choices=Form.choices)
    f = SymbolicCoefficientField()
    g = SymbolicCoefficientField()
    p0 = PolynomialField()
    normalization = NormalizationSerializer(required=False, allow_null=True)
    nonnegative = serializers.BooleanField(required=False, default=True)
    g_vanishes_at_one = serializers.BooleanField(read_only=True)

    def validate(self, data):
        """Собирает RecurrenceSpec и переводит ошибки в ValidationError."""
        normalization = data.get('normalization')
        try:
            if normalization is not None:
                normalization = Normalization.from_params(
                    normalization['kind'], normalization.get('params', {}))
            data['spec'] = RecurrenceSpec(
                form=data['form'],
                f=data['f'],
                g=data['g'],
                p0=data['p0'],
                normalization=normalization,
                nonnegative=data.get('nonnegative', True),
                name=data.get('name', ''),
            )
        except PolyrecError as error:
            raise ValidationError({'errors': str(error)})
        return data

    def create(self, validated_data):
        return validated_data['spec']


class IndexedPolynomialSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    coefficients = PolynomialField(source='polynomial')
    text = serializers.SerializerMethodField()

    def get_text(self, obj):
        return str(obj['polynomial'])


class MomentReportSerializer(serializers.Serializer):
    n = serializers.IntegerField(allow_null=True)
    normalizer = RationalField()
    factorial_moments = serializers.ListField(child=NumberField())
    mean = NumberField()
    variance = NumberField(allow_null=True)
    standardized_moments = serializers.ListField(
        child=serializers.FloatField(), allow_null=True)


class RootEnclosureSerializer(serializers.Serializer):
    lo = RationalField()
    hi = RationalField()
    multiplicity = serializers.IntegerField()


class RootCertificateSerializer(serializers.Serializer):
    """Сертификат вещественности корней."""

    degree = serializers.IntegerField()
    real_rooted = serializers.BooleanField()
    real_root_count = serializers.IntegerField()
    roots = RootEnclosureSerializer(many=True)
    width_bound = RationalField()
    expect_interval = serializers.ListField(child=RationalField(),
                                            allow_null=True)
    roots_in_interval = serializers.IntegerField(allow_null=True)
    inside_expected = serializers.BooleanField(allow_null=True)


class FloatIntervalSerializer(serializers.Serializer):
    lo = serializers.FloatField()
    hi = serializers.FloatField()


class BernoulliDecompositionSerializer(serializers.Serializer):
    success_probs = serializers.ListField(
        child=serializers.ListField(child=RationalField()))
    width_bound = RationalField()
    mean_bracket = serializers.SerializerMethodField()
    variance_bracket = serializers.SerializerMethodField()

    def get_mean_bracket(self, obj):
        return [format_rational(value) for value in obj.mean_bracket()]

    def get_variance_bracket(self, obj):
        return [format_rational(value) for value in obj.variance_bracket()]


class PoissonDiagnosisSerializer(serializers.Serializer):
    family = serializers.CharField()
    nmax = serializers.IntegerField()
    rmax = serializers.IntegerField()
    c_estimates = serializers.ListField(child=RationalField())
    c_is_constant = serializers.BooleanField()
    ratio_g_over_f = serializers.ListField(child=RationalField())
    factorial_moment_table = serializers.SerializerMethodField()
    c_limit = serializers.FloatField()
    max_deviation_at_nmax = serializers.FloatField()
    doubling_factor = serializers.IntegerField()
    limit = serializers.CharField()

    def get_factorial_moment_table(self, obj):
        return [{'n': n, 'r': r, 'value': format_rational(value)}
                for n, r, value in obj.factorial_moment_table]


class CltReportSerializer(serializers.Serializer):
    family = serializers.CharField()
    n = serializers.IntegerField()
    certificate = RootCertificateSerializer()
    decomposition = BernoulliDecompositionSerializer()
    mean = RationalField()
    variance = RationalField()
    lyapunov = FloatIntervalSerializer(allow_null=True)
    standardized_m3 = serializers.FloatField(allow_null=True)
    standardized_m4 = serializers.FloatField(allow_null=True)
    gaussian_m3 = serializers.FloatField()
    gaussian_m4 = serializers.FloatField()


class LocalLimitReportSerializer(serializers.Serializer):
    family = serializers.CharField()
    n = serializers.IntegerField()
    mean = serializers.FloatField()
    variance = serializers.FloatField()
    sup_abs_error = serializers.FloatField()
    argmax = serializers.IntegerField()
    pmf_total = RationalField()
    density_total = serializers.FloatField()


class ScaledMomentReportSerializer(serializers.Serializer):
    family = serializers.CharField()
    scaling = serializers.CharField()
    grid = serializers.ListField(child=serializers.IntegerField())
    kmax = serializers.IntegerField()
    moment_ratios = serializers.SerializerMethodField()
    variance_ratios = serializers.SerializerMethodField()
    variance_target = serializers.FloatField()

    def get_moment_ratios(self, obj):
        return [{'n': n, 'k': k, 'ratio': ratio}
                for n, k, ratio in obj.moment_ratios]

    def get_variance_ratios(self, obj):
        return [{'n': n, 'ratio': ratio} for n, ratio in obj.variance_ratios]


class TableauSerializer(serializers.Serializer):
    size = serializers.IntegerField()
    row_lengths = serializers.ListField(source='shape.row_lengths',
                                        child=serializers.IntegerField())
    points = serializers.SerializerMethodField()
    text = serializers.CharField(source='to_text')

    def get_points(self, obj):
        return [list(cell) for cell in sorted(obj.points)]


class StatisticDistributionSerializer(serializers.Serializer):
    """Гистограмма в виде {statistic, n, counts: [...]}."""

    statistic = serializers.CharField()
    n = serializers.IntegerField()
    symmetric = serializers.BooleanField()
    counts = serializers.ListField(child=serializers.IntegerField())
    total = serializers.IntegerField()
    pmf = serializers.SerializerMethodField()

    def get_pmf(self, obj):
        return [format_rational(q) for q in obj.pmf.probabilities]


class FamilyQuerySerializer(serializers.Serializer):
    """Параметры семейств из строки запроса."""

    a = RationalField(required=False)
    b = RationalField(required=False)
    c = RationalField(required=False)
    m = RationalField(required=False)


class PolynomialsQuerySerializer(FamilyQuerySerializer):
    nmax = serializers.IntegerField(min_value=0, max_value=API_NMAX_LIMIT,
                                    default=10)


class MomentsQuerySerializer(FamilyQuerySerializer):
    n = serializers.IntegerField(min_value=0, max_value=API_NMAX_LIMIT)
    rmax = serializers.IntegerField(min_value=2, default=DEFAULT_RMAX)


class RootsQuerySerializer(FamilyQuerySerializer):
    n = serializers.IntegerField(min_value=0, max_value=API_ROOTS_N_LIMIT)
    eps = RationalField(required=False)

    def validate_eps(self, value):
        if value <= 0:
            raise ValidationError('Точность eps должна быть больше 0.')
        return value


class DistributionQuerySerializer(serializers.Serializer):
    stat = serializers.ChoiceField(choices=Statistic.choices)
    n = serializers.IntegerField(min_value=1)
    symmetric = serializers.BooleanField(default=False)
