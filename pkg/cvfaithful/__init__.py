from logging import DEBUG, INFO, CRITICAL, WARNING, FATAL

__version__="0.4.0"

from .faithfulerror import FaithfulError, ParameterError, NumericalError, NotInvertibleError, GridBoundsError, MemoryBudgetError
from .logs import set_log_level
from .fockoperator import FockOperator, BipartiteOperator, DoubleKet
from .densityoperator import DensityOperator
from .gaussianmoments import GaussianMoments
from .checkoperator import CheckOperator, FaithfulnessReport, GaussianCoefficients
from .phasespacegrid import PhaseSpaceGrid
from .channel import Channel, ChoiMatrix, ReconstructionResult
from .forwardmap import ForwardMap
from .parsedspec import ParsedSpec
from .state import State, save_state
from .states import twin_beam, split_thermal, correlated_fock, product_state, vacuum, thermal, coherent, moments_of, photon_number
from .phasespace import wigner_point, characteristic_point, wigner_grid, characteristic_grid, state_from_wigner, plane
from .faithfulness import check_operator, check_from_decomposition, classify, invert_check, chi, ab_coefficients, gaussian_faithful, assess
from .tomography import apply_channel_first, choi_of, forward_map, reconstruct, noise_amplification_study
