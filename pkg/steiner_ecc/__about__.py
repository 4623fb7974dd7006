# -*- coding: utf-8 -*-
__version__ = "0.1.0.dev"
__description__ = (
    "Steiner k-eccentricity of tree vertices: linear-time greedy, brute-force oracle "
    "and extremal tree transformations"
)
