from intervallum.errors import SpecParseError
from intervallum.spacings.models import Layout, Ordering, SpacingScheme
from intervallum.statistics.models import (
    BUILTIN_H_FUNCTIONS,
    HFunction,
    StatisticSpec,
)


class HFunctionRegistry:
    """Registry of named score functions.

    Built-in functions are registered by get_default_registry(); user
    functions registered here become usable in statistic spec strings.
    Keys are case-insensitive.
    """

    def __init__(self) -> None:
        """Initialize an empty registry."""
        self._functions: dict[str, HFunction] = {}

    def register(self, h: HFunction, key: str | None = None) -> None:
        """Register a score function.

        Args:
            h: Score function
            key: Name to register under (defaults to h.name)

        Raises:
            ValueError: If key is empty or already registered
        """
        key = (key or h.name).lower()
        if not key:
            raise ValueError("Score function key cannot be empty")

        if key in self._functions:
            raise ValueError(f"Score function '{key}' is already registered")

        self._functions[key] = h

    def get(self, key: str) -> HFunction:
        """Get a score function by name.

        Raises:
            KeyError: If the name is not registered
        """
        normalized = key.lower()
        if normalized not in self._functions:
            available = ", ".join(self.list_keys())
            raise KeyError(
                f"Score function '{key}' not found. "
                f"Available score functions: {available or 'none'}"
            )

        return self._functions[normalized]

    def has(self, key: str) -> bool:
        return key.lower() in self._functions

    def list_keys(self) -> list[str]:
        return list(self._functions.keys())

    def unregister(self, key: str) -> None:
        """Remove a score function from the registry.

        Raises:
            KeyError: If the name is not registered
        """
        normalized = key.lower()
        if normalized not in self._functions:
            raise KeyError(f"Score function '{key}' not found")

        del self._functions[normalized]

    def clear(self) -> None:
        self._functions.clear()

    def parse_statistic(self, spec: str) -> StatisticSpec:
        """Parse a statistic spec string.

        Grammar (case-insensitive, ':'-separated)::

            <h>                        usual simple spacings
            <h>:co                     centre-outward simple spacings
            <h>:max                    max of usual and centre-outward statistics
            <h>[:co]:m=<int>[:disjoint|:overlap]   m-step spacings (layout defaults to disjoint)

        Raises:
            SpecParseError: If the string does not follow the grammar
        """
        tokens = [token.strip().lower() for token in spec.split(":")]
        name, options = tokens[0], tokens[1:]
        try:
            h = self.get(name)
        except KeyError as e:
            raise SpecParseError(str(e.args[0]), {"spec": spec}) from e

        ordering = Ordering.USUAL
        combined = False
        m: int | None = None
        layout: Layout | None = None
        seen: set[str] = set()

        for token in options:
            head = token.split("=", 1)[0]
            if head in seen:
                raise SpecParseError(f"repeated option '{head}' in '{spec}'", {"spec": spec})
            seen.add(head)

            if token == "co":
                ordering = Ordering.CENTRE_OUTWARD
            elif token == "max":
                combined = True
            elif head == "m":
                try:
                    m = int(token.split("=", 1)[1])
                except (IndexError, ValueError) as e:
                    raise SpecParseError(f"invalid step in '{spec}'", {"spec": spec}) from e
                if m < 1:
                    raise SpecParseError(f"step must be at least 1 in '{spec}'", {"spec": spec})
            elif token in (Layout.DISJOINT.value, Layout.OVERLAPPING.value):
                if layout is not None:
                    raise SpecParseError(f"repeated layout in '{spec}'", {"spec": spec})
                layout = Layout(token)
            else:
                raise SpecParseError(
                    f"Unknown option '{token}' in '{spec}'. "
                    "Available options: co, max, m=<int>, disjoint, overlap",
                    {"spec": spec},
                )

        if layout is not None and m is None:
            raise SpecParseError(f"layout requires m=<int> in '{spec}'", {"spec": spec})
        if combined and (ordering is Ordering.CENTRE_OUTWARD or (m or 1) > 1):
            raise SpecParseError(
                f"'max' combines usual and co simple spacings; it takes no other option: '{spec}'",
                {"spec": spec},
            )

        scheme = SpacingScheme(ordering, m or 1, layout or Layout.DISJOINT)
        return StatisticSpec(h, scheme, combined)


def _build_default_registry() -> HFunctionRegistry:
    registry = HFunctionRegistry()
    for h in BUILTIN_H_FUNCTIONS:
        registry.register(h)
    return registry


# Global score function registry instance
_default_registry = _build_default_registry()


def get_default_registry() -> HFunctionRegistry:
    """Get the global registry holding the built-in score functions."""
    return _default_registry


def parse_statistic(spec: str) -> StatisticSpec:
    """Parse a statistic spec string against the global registry."""
    return _default_registry.parse_statistic(spec)
