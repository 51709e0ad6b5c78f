"""One-off maintenance tasks, runnable with ``python -m``."""
