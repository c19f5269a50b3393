"""Non-relativistic limit of the 2D :phi^4: contact interaction: scattering,
bound states, regularization schemes, few-boson stability and boost checks."""

__version__ = "0.1.0"
