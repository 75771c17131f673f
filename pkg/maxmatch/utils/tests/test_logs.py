import logging

from maxmatch.utils._logs import (
    add_file_handler,
    logger,
    remove_handler,
    set_log_level,
    verbose,
)


@verbose
def _log(*, verbose=None):
    logger.debug("debug")
    logger.info("info")
    logger.warning("warning")


def test_default_verbosity(caplog):
    """Test the default verbosity."""
    set_log_level("WARNING")
    caplog.clear()
    _log()
    assert "debug" not in caplog.text
    assert "info" not in caplog.text
    assert "warning" in caplog.text


def test_verbose(caplog):
    """Test the verbose decorator."""
    set_log_level("WARNING")
    caplog.clear()
    _log(verbose="DEBUG")
    assert "debug" in caplog.text
    assert "info" in caplog.text
    assert logger.level == logging.WARNING
    caplog.clear()
    _log(verbose=False)
    assert "info" not in caplog.text


def test_file_handler(tmp_path):
    """Test the file handler of the command line."""
    set_log_level("INFO")
    fname = tmp_path / "maxmatch.log"
    handler = add_file_handler(fname, mode="w")
    logger.info("Recorded message.")
    logger.debug("Dropped message.")
    remove_handler(handler)
    logger.info("After removal.")
    text = fname.read_text()
    assert "INFO: Recorded message." in text
    assert "Dropped" not in text
    assert "After removal" not in text
    assert handler not in logger.handlers
