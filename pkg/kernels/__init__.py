# Kernels module
