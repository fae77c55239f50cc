# Command-line interface