# Regression tests
