from logging import CRITICAL

from .faithfulerror import ParameterError
from .gridworker import thread_count

COMMANDS = ("state", "wigner", "char", "check", "chi", "tomo", "sweep")


class RunConfig:
    """Everything one CLI invocation needs; threads fall back to CVFAITHFUL_THREADS."""

    def __init__(self, command: str, state_spec: str | None = None, dim: int | None = None, tol: float = 1e-10,
                 grid_extent: float = 1.0, grid_points: int = 9, out: str | None = None, seed: int = 0,
                 threads: int | None = None, channel: str = "phase", channel_param: float | None = None,
                 epsilons=(0.0, 1e-6), epsilon: float = 1e-6, trials: int = 100, lambdas=(0.2, 0.5, 0.8),
                 sweep=None, method: str = "svd", step: float = 1e-3, log_level: int = CRITICAL):
        if command not in COMMANDS:
            raise ParameterError("RunConfig", "unknown command '%s'" % command, field="command")
        self.command = command
        self.state_spec = state_spec
        self.dim = dim
        self.tol = float(tol)
        self.grid_extent = float(grid_extent)
        self.grid_points = int(grid_points)
        self.out = out
        self.seed = int(seed)
        self.threads = thread_count(threads)
        self.channel = channel
        self.channel_param = channel_param
        self.epsilons = [float(e) for e in epsilons]
        self.epsilon = float(epsilon)
        self.trials = int(trials)
        self.lambdas = [float(l) for l in lambdas]
        self.sweep = [int(d) for d in sweep] if sweep else None
        self.method = method
        self.step = float(step)
        self.log_level = log_level
        self.validate()

    def __repr__(self):
        return "%s(command=%s, state=%s, dim=%s, seed=%d, threads=%d)" % (self.__class__.__name__, self.command, self.state_spec, self.dim, self.seed, self.threads)

    def validate(self):
        if not 0.0 < self.tol < 1.0:
            raise ParameterError("RunConfig", "tolerance %s outside (0, 1)" % self.tol, field="tol")
        if self.dim is not None and self.dim < 2:
            raise ParameterError("RunConfig", "truncation %d below 2" % self.dim, field="dim")
        if self.grid_points < 1 or self.grid_extent <= 0:
            raise ParameterError("RunConfig", "grid of %d points over extent %s" % (self.grid_points, self.grid_extent), field="grid")
        if self.trials < 1:
            raise ParameterError("RunConfig", "%d trials" % self.trials, field="trials")
        if any(e < 0 for e in self.epsilons + [self.epsilon]):
            raise ParameterError("RunConfig", "negative noise magnitude", field="epsilons")
        if self.command in ("state", "wigner", "char", "check", "chi", "tomo") and not self.state_spec:
            raise ParameterError("RunConfig", "command '%s' needs a state" % self.command, field="state")

    @classmethod
    def from_arguments(cls, arguments):
        values = {key: value for key, value in vars(arguments).items() if value is not None}
        return cls(**values)
