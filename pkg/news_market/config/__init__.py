# Configuration management