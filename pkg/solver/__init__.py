# Solver module
