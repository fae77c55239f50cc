# Utility functions and helpers