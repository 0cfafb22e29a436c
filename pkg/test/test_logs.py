from logging import DEBUG, WARNING, CRITICAL

from pytest import fixture

from cvfaithful import set_log_level, twin_beam, product_state, vacuum
from cvfaithful.phasespace import wigner_point

@fixture
def log_level():
    def apply(level):
        set_log_level(level)
    yield apply
    set_log_level(CRITICAL)

###################################################################################################

def test_loggers_are_silent_by_default(caplog):
    wigner_point(product_state(vacuum(4), vacuum(4)), 3.0, 0)
    assert not [record for record in caplog.records if record.name.startswith("cvfaithful")]

def test_warning_beyond_reliable_radius(caplog, log_level):
    log_level(WARNING)
    wigner_point(product_state(vacuum(4), vacuum(4)), 3.0, 0)
    warnings = [record for record in caplog.records if record.name == "cvfaithful.warn"]
    assert warnings and "reliable radius" in warnings[0].getMessage()

def test_detail_logging(caplog, log_level):
    log_level(DEBUG)
    wigner_point(twin_beam(0.5, 5), 0.1, 0.1)
    assert any(record.name == "cvfaithful.detail" for record in caplog.records)
