# Make tests a package so relative imports (e.g., from .conftest) work in Python.
