from .faithfulerror import ParameterError

CONJUGACY_TOLERANCE = 1e-8


class GaussianMoments:
    """First moments and centered second moments of modes a and b (photon-number units).

    Centered second moments <Delta P Q> = <P Q> - <P><Q>; attribute names spell the
    operator product, e.g. adag_b is <Delta a^dag b>.
    """

    FIELDS = ("mean_a", "mean_b", "adag_bdag", "ab", "adag_b", "a_bdag", "adag_a", "bdag_b", "a2", "b2")

    def __init__(self, mean_a=0j, mean_b=0j, adag_bdag=0j, ab=0j, adag_b=0j, a_bdag=0j, adag_a=0j, bdag_b=0j, a2=0j, b2=0j):
        self.mean_a = complex(mean_a)
        self.mean_b = complex(mean_b)
        self.adag_bdag = complex(adag_bdag)
        self.ab = complex(ab)
        self.adag_b = complex(adag_b)
        self.a_bdag = complex(a_bdag)
        self.adag_a = complex(adag_a)
        self.bdag_b = complex(bdag_b)
        self.a2 = complex(a2)
        self.b2 = complex(b2)

    def __repr__(self):
        return "%s(%s)" % (self.__class__.__name__, ", ".join("%s=%s" % (name, getattr(self, name)) for name in self.FIELDS))

    def check_conjugacy(self, tol: float = CONJUGACY_TOLERANCE):
        for name in ("adag_a", "bdag_b"):
            value = getattr(self, name)
            if abs(value.imag) > tol or value.real < -tol:
                raise ParameterError("GaussianMoments", "%s = %s is not real and non-negative" % (name, value), field=name)
        if abs(self.a_bdag - self.adag_b.conjugate()) > tol:
            raise ParameterError("GaussianMoments", "a_bdag is not the conjugate of adag_b", field="a_bdag")
        if abs(self.adag_bdag - self.ab.conjugate()) > tol:
            raise ParameterError("GaussianMoments", "adag_bdag is not the conjugate of ab", field="adag_bdag")
        return self

    def to_dict(self):
        return {name: [getattr(self, name).real, getattr(self, name).imag] for name in self.FIELDS}
