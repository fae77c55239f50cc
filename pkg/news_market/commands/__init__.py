# Simulator commands