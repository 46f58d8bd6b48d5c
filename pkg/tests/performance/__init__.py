# Performance tests
