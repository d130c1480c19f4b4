import logging

import pytest

from orthocode.probes.announcement import announcement
from orthocode.probes.dispatcher import BasicDispatcher
from orthocode.probes.observation import BaseObservation
from orthocode.probes.probe import (
    LOGGER_NAME,
    Probe,
    get_probe,
    probe,
    resolve,
)


class MockInstrument:

    def __init__(self):
        self.msgs = []

    def store(self, msg):
        self.msgs.append(msg)


class MockObservation(BaseObservation):

    @announcement(MockInstrument)
    def announce(self, instrument: MockInstrument) -> None:
        instrument.store("announcement!")


class MockDispatcher:

    def __init__(self):
        self.seen = []

    def dispatch(self, observation):
        self.seen.append(observation)


class TestProbe:

    def test_init(self):
        # Arrange
        dispatcher = MockDispatcher()
        # Act
        mock_probe = Probe(dispatcher)
        # Assert
        assert mock_probe.dispatcher is dispatcher

    def test_observe_forwards_to_dispatcher(self):
        # Arrange
        dispatcher = MockDispatcher()
        observation = MockObservation()
        # Act
        Probe(dispatcher).observe(observation)
        # Assert
        assert dispatcher.seen == [observation]

    def test_observe_reaches_instrument(self):
        # Arrange
        instrument = MockInstrument()
        # Act
        get_probe(instrument).observe(MockObservation())
        # Assert
        assert instrument.msgs == ["announcement!"]

    def test_equality_same_dispatcher(self):
        # Arrange
        dispatcher = MockDispatcher()
        # Act + Assert
        assert Probe(dispatcher) == Probe(dispatcher)

    def test_equality_other_type(self):
        # Act + Assert
        assert Probe(MockDispatcher()) != "probe"

    def test_equal_probes_hash_equal(self):
        # Arrange
        instrument = MockInstrument()
        # Act + Assert
        assert hash(get_probe(instrument)) == hash(get_probe(instrument))

    def test_repr(self):
        # Arrange
        instrument = MockInstrument()
        # Act
        text = repr(get_probe(instrument))
        # Assert
        assert text.startswith("Probe(dispatcher=BasicDispatcher(")


class TestGetProbe:

    def test_defaults_to_package_logger(self):
        # Act
        default = get_probe()
        # Assert
        assert default.dispatcher == BasicDispatcher(
            logging.getLogger(LOGGER_NAME)
        )

    def test_given_instruments(self):
        # Arrange
        logger = logging.getLogger("test.probe")
        # Act
        custom = get_probe(logger)
        # Assert
        assert list(custom.dispatcher.registry) == [logger]


class TestResolve:

    def test_none_gives_default(self):
        # Act + Assert
        assert resolve(None) is probe

    @pytest.mark.parametrize("given", [get_probe(MockInstrument())])
    def test_keeps_given_probe(self, given):
        # Act + Assert
        assert resolve(given) is given
