# Command registry and processor