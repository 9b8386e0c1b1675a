"""
Console display and report rendering.
"""

from .display import DisplayManager
from .report import Report, ReportFormat, diagram_payload, render_dot, render_json, render_markdown

__all__ = [
    "DisplayManager",
    "Report",
    "ReportFormat",
    "diagram_payload",
    "render_dot",
    "render_json",
    "render_markdown",
]
