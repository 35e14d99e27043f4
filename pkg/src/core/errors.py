"""
Errors — иерархия исключений RGHW-Ramp

Все ошибки библиотеки наследуются от RghwError, чтобы CLI мог отличать
ошибки входных данных (exit 3) от расхождений с эталонами (exit 2).

Каждое исключение дополнительно наследует подходящий builtin
(ValueError / TypeError / RuntimeError / AssertionError), поэтому код,
ожидающий стандартные исключения, продолжает работать.
"""


class RghwError(Exception):
    """Базовое исключение библиотеки."""


class FieldMismatchError(RghwError, TypeError):
    """Операнды из разных полей или векторы разной длины."""


class InvalidParameterError(RghwError, ValueError):
    """Нарушение предусловия: диапазон m, простота p, gcd генераторов и т.п."""


class NotSubcodeError(InvalidParameterError):
    """C2 не содержится в C1 (проверка рангом)."""


class SearchLimitExceeded(RghwError, ValueError):
    """Перебор превышает сконфигурированный лимит (см. SearchLimits)."""


class InconsistentSharesError(RghwError, ValueError):
    """Наблюдаемые доли не являются ограничением ни одного вектора долей."""


class InconsistentFamilyError(RghwError, RuntimeError):
    """
    Данные семейства кодов противоречивы.

    Например: evaluation data исчерпаны до достижения ранга n,
    или H*(Q) не замкнуто относительно разложений в H(Q).
    """


class FixtureMismatchError(RghwError, AssertionError):
    """Воспроизведённое значение не совпало с эталонным."""
