from rest_framework.pagination import PageNumberPagination


class CustomLimitPagination(PageNumberPagination):
    """Класс пагинатор для последовательностей многочленов.
    Атрибуты:
        - `page_size_query_param` - число многочленов на странице.
        - `max_page_size` - верхняя граница для `limit`.
    """

    page_size_query_param = "limit"
    max_page_size = 100
