"""reflorbit: exact construction of finite complex reflection groups, middle
convolution of reflection tuples, and braid-group orbit enumeration on SL2
character varieties of the punctured sphere."""

from reflorbit._backend import KERNEL_NAME

__version__ = "0.1.0"
__all__ = ["KERNEL_NAME", "__version__"]
