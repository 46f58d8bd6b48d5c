# Shared value types
