# RSK Lab - shape stability of the RSK correspondence under transpositions
__version__ = "0.1.0"
