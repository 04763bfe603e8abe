"""Collects one line per acceptance criterion for the terminal summary."""

LINES: dict[int, str] = {}


def record(number: int, ok: bool, text: str):
    LINES[number] = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {text}"
