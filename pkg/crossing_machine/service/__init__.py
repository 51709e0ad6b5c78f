"""Service layer: counting, oracle, search, bounds and record checks."""
