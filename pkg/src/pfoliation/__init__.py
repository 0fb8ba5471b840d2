"""p-divisors of plane foliations and irreducibility certificates."""

from .certificate import CertificateReport, theorem_main_certificate
from .families import FamilySpec, expected_divisor, make_field, verify_family_theorem
from .foliation import PlaneVectorField, degree_and_linf, p_divisor, p_power, wedge
from .newton import certify_irreducible, newton_polytope

__version__ = "0.1.0"
