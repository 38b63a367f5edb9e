"""
Output Renderers
================
JSON and plain-text table renderers for reports, certificates, bounds and
search results. Resolved by kind and format through `badprimes.registry`.
"""

from typing import Any, Protocol, runtime_checkable


@runtime_checkable
class Renderer(Protocol):
    """Protocol for output renderers"""

    def __call__(self, obj: Any, **options: Any) -> str:
        """
        Render a result object

        Args:
            obj: Report, certificate, bound report or witness report
            options: Renderer flags (`timings`, `expanded`)

        Returns:
            Rendered output as string
        """
        ...


__all__ = ["Renderer"]
