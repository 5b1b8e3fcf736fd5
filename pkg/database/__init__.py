from .sigma_repository import SigmaRepository, SigmaSpec
