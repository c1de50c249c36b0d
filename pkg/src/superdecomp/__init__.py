"""superdecomp: exact structure theory of compact and unitary Lie superalgebras."""

__version__ = "0.1.0"
