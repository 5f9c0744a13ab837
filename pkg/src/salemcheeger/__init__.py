"""Salem numbers, arithmetic-surface data, and Cheeger inequalities for double covers."""

__version__ = "0.1.0"
