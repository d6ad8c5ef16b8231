"""Test BoundsLogger routing and formatting"""

import io
import logging

import pytest
from rich.logging import RichHandler

from subblock_bounds import logging as bounds_logging
from subblock_bounds.logging import BoundsLogger, LogConfig, get_console


@pytest.fixture
def plain_stream():
    """Extra stream handler on the plain-mode logger, removed afterwards"""
    stream = io.StringIO()
    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter("%(message)s"))
    bounds_logging.logger.addHandler(handler)
    yield stream
    bounds_logging.logger.removeHandler(handler)


class TestLogConfig:
    """Verbosity gating"""

    @pytest.mark.unit
    def test_should_log(self):
        config = LogConfig(verbose=1)
        assert config.should_log(0)
        assert config.should_log(1)
        assert not config.should_log(2)
        assert LogConfig(verbose=0).should_log(0)

    @pytest.mark.unit
    def test_console_writes_to_stderr(self):
        assert get_console(use_rich=True).stderr
        assert get_console(use_rich=False).stderr
        assert not get_console(use_rich=False, stderr=False).stderr


class TestExternalLogger:
    """Structured records handed to a callback"""

    @pytest.mark.unit
    def test_record_shape(self, capturing_logger, log_records):
        capturing_logger.info("Solved", category="lp", auxiliary={"pivots": 3})
        record = log_records[0]
        assert set(record) == {"message", "level", "timestamp", "category", "auxiliary"}
        assert record["message"] == "Solved"
        assert record["level"] == 1
        assert record["category"] == "lp"
        assert record["auxiliary"] == {"pivots": 3}

    @pytest.mark.unit
    def test_optional_keys_omitted(self, capturing_logger, log_records):
        capturing_logger.error("Bare")
        assert set(log_records[0]) == {"message", "level", "timestamp"}
        assert log_records[0]["level"] == 0

    @pytest.mark.unit
    def test_verbosity_filters_records(self, log_records):
        logger = BoundsLogger(verbose=0, external_logger=log_records.append)
        logger.info("hidden")
        logger.debug("hidden")
        logger.error("shown")
        assert [r["message"] for r in log_records] == ["shown"]

    @pytest.mark.unit
    def test_config_overrides_arguments(self, log_records):
        config = LogConfig(verbose=2, external_logger=log_records.append)
        logger = BoundsLogger(verbose=0, config=config)
        logger.debug("kept")
        assert logger.verbose == 2
        assert len(log_records) == 1


class TestConsoleOutput:
    """Rich and plain rendering"""

    @pytest.mark.unit
    def test_rich_output_goes_to_stderr(self, capsys):
        logger = BoundsLogger(verbose=1, use_rich=True)
        logger.info("Reduced program built", category="cscc", auxiliary={"orbits": 8})
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "Reduced program built" in captured.err
        assert "orbits=8" in captured.err

    @pytest.mark.unit
    def test_rich_table_for_larger_auxiliary(self, capsys):
        logger = BoundsLogger(verbose=1, use_rich=True)
        logger.info("Oracle", auxiliary={"reduced": "83/2", "full": "83/2", "code_size": 12})
        err = capsys.readouterr().err
        assert "code_size" in err
        assert "12" in err

    @pytest.mark.unit
    def test_plain_mode_uses_stdlib_logger(self, mocker):
        stdlib = mocker.patch("subblock_bounds.logging.logger")
        logger = BoundsLogger(verbose=2, use_rich=False)
        logger.error("bad", category="cli")
        logger.info("fine", auxiliary={"ratio": 0.123456789})
        logger.debug("detail")
        stdlib.error.assert_called_once_with("[cli] bad")
        stdlib.info.assert_called_once_with("fine (ratio=0.123457)")
        stdlib.debug.assert_called_once_with("detail")


class TestPlainMode:
    """Stdlib backend without markup"""

    @pytest.mark.unit
    def test_no_rich_handler_on_plain_logger(self):
        assert bounds_logging.logger.handlers
        assert not any(isinstance(h, RichHandler) for h in bounds_logging.logger.handlers)

    @pytest.mark.regression
    def test_brackets_printed_literally(self, plain_stream):
        logger = BoundsLogger(verbose=1, use_rich=False)
        logger.info("row [bold]3[/bold] uncovered", category="lp")
        assert plain_stream.getvalue() == "[lp] row [bold]3[/bold] uncovered\n"

    @pytest.mark.regression
    def test_thresholds_are_per_logger(self, plain_stream):
        loud = BoundsLogger(verbose=2, use_rich=False)
        quiet = BoundsLogger(verbose=0, use_rich=False)
        loud.debug("loud detail")
        quiet.debug("quiet detail")
        quiet.info("quiet info")
        loud.info("loud info")
        assert plain_stream.getvalue().splitlines() == ["loud detail", "loud info"]

    @pytest.mark.regression
    def test_rich_mode_escapes_markup(self, capsys):
        logger = BoundsLogger(verbose=1, use_rich=True)
        logger.info("profile [bold]3[/bold]", category="orbits")
        err = capsys.readouterr().err
        assert "profile [bold]3[/bold]" in err

    @pytest.mark.unit
    def test_plain_output_reaches_current_stderr(self, capsys):
        logger = BoundsLogger(verbose=1, use_rich=False)
        logger.error("d must lie in [1, mL=6]", category="cli")
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "ERROR [cli] d must lie in [1, mL=6]" in captured.err
