from decimal import Decimal
from fractions import Fraction as _Fraction

from .errors import SteinerError
from .marshalling import marshal


__all__ = (
    "Raw",
    "String",
    "Integer",
    "Boolean",
    "List",
    "Nested",
    "Fraction",
    "Edge",
    "MarshallingError",
)


class MarshallingError(SteinerError):
    """
    This is an encapsulating Exception in case of marshalling error.
    """

    def __init__(self, underlying_exception):
        # just put the contextual representation of the error to hint on what
        # went wrong without exposing internals
        super(MarshallingError, self).__init__(str(underlying_exception))


def is_indexable_but_not_string(obj):
    return not hasattr(obj, "strip") and hasattr(obj, "__iter__")


def get_value(key, obj, default=None):
    """Helper for pulling a keyed value off various types of objects"""
    if callable(key):
        return key(obj)
    if isinstance(obj, dict):
        return obj.get(key, default)
    if isinstance(obj, (list, tuple)):
        try:
            return obj[int(key)]
        except (IndexError, TypeError, ValueError):
            return default
    return getattr(obj, key, default)


class Raw(object):
    """
    Raw provides a base field class from which others should extend. It
    applies no formatting by default, and should only be used in cases where
    data does not need to be formatted before being serialized. Fields should
    throw a :class:`MarshallingError` in case of formatting problem.

    :param default: The default value for the field, if no value is
        specified.
    :param attribute: If the public facing value differs from the internal
        value, use this to retrieve a different attribute from the data
        than the publicly named value. May be a callable taking the data.
    """

    def __init__(self, default=None, attribute=None):
        self.attribute = attribute
        self.default = default

    def format(self, value):
        """
        Formats a field's value. No-op by default.

        :param value: The value to format
        :raises MarshallingError: In case of formatting problem
        """
        return value

    def output(self, key, obj, **kwargs):
        """
        Pulls the value for the given key from the object, applies the
        field's formatting and returns the result. If the key is not found
        in the object, returns the default value.

        :raises MarshallingError: In case of formatting problem
        """
        value = get_value(key if self.attribute is None else self.attribute, obj)

        if value is None:
            return self.default

        try:
            return self.format(value)
        except MarshallingError as e:
            msg = 'Unable to marshal field "{0}" value "{1}": {2}'.format(
                key, value, str(e)
            )
            raise MarshallingError(msg)


class String(Raw):
    """Marshal a value as a string"""

    def format(self, value):
        try:
            return str(value)
        except ValueError as ve:
            raise MarshallingError(ve)


class Integer(Raw):
    """Field for outputting an integer value."""

    def format(self, value):
        try:
            if isinstance(value, bool) or int(value) != value:
                raise ValueError("{0!r} is not an integer".format(value))
            return int(value)
        except (TypeError, ValueError) as ve:
            raise MarshallingError(ve)


class Boolean(Raw):
    """Field for outputting a boolean value."""

    def format(self, value):
        return bool(value)


class Fraction(Raw):
    """
    One integer part of an exact rational.

    :param str part: ``"numerator"`` or ``"denominator"``
    """

    def __init__(self, part, **kwargs):
        if part not in ("numerator", "denominator"):
            raise MarshallingError("Unknown fraction part {0!r}".format(part))
        self.part = part
        super(Fraction, self).__init__(**kwargs)

    def format(self, value):
        try:
            if isinstance(value, (float, Decimal)):
                raise TypeError("{0!r} is not exact".format(value))
            value = _Fraction(value)
        except (TypeError, ValueError) as e:
            raise MarshallingError(e)
        return getattr(value, self.part)


class List(Raw):
    """
    Field for marshalling lists of other fields.

    :param cls_or_instance: The field type the list will contain.
    """

    def __init__(self, cls_or_instance, **kwargs):
        super(List, self).__init__(**kwargs)
        error_msg = "The type of the list elements must be a subclass of fields.Raw"
        if isinstance(cls_or_instance, type):
            if not issubclass(cls_or_instance, Raw):
                raise MarshallingError(error_msg)
            self.container = cls_or_instance()
        else:
            if not isinstance(cls_or_instance, Raw):
                raise MarshallingError(error_msg)
            self.container = cls_or_instance

    def format(self, value):
        if isinstance(value, (set, frozenset)):
            value = sorted(value)
        if not is_indexable_but_not_string(value) or isinstance(value, dict):
            raise MarshallingError("{0!r} is not a list".format(value))
        value = list(value)
        return [self.container.output(idx, value) for idx in range(len(value))]


class Edge(List):
    """An edge as a ``[u, v]`` pair of integers"""

    def __init__(self, **kwargs):
        super(Edge, self).__init__(Integer, **kwargs)

    def format(self, value):
        value = super(Edge, self).format(value)
        if len(value) != 2:
            raise MarshallingError("An edge has two endpoints, got {0}".format(value))
        return value


class Nested(Raw):
    """
    Allows you to nest one set of fields inside another.

    :param dict model: The model dictionary to nest
    :param bool skip_none: Eliminate inner fields which value is None
    """

    def __init__(self, model, skip_none=False, **kwargs):
        self.model = model
        self.skip_none = skip_none
        super(Nested, self).__init__(**kwargs)

    def output(self, key, obj, ordered=False, **kwargs):
        value = get_value(key if self.attribute is None else self.attribute, obj)
        if value is None:
            return self.default
        return marshal(value, self.model, skip_none=self.skip_none, ordered=ordered)
