import logging

import pytest

from orthocode.probes.announcement import announcement
from orthocode.probes.dispatcher import (
    BasicDispatcher,
    DispatcherProtocol,
    InstrumentRegistry,
)
from orthocode.probes.exceptions import ReqInstrumException
from orthocode.probes.observation import BaseObservation


class MockInstrument:

    def __init__(self):
        self.calls = []


class OtherInstrument:
    pass


class MockObservation(BaseObservation):

    @announcement(MockInstrument)
    def foo(self, instrument: MockInstrument) -> None:
        instrument.calls.append(("foo", self))


class MockObservationWithRequired(BaseObservation):

    @announcement(OtherInstrument, required=True)
    def needs_other(self, instrument: OtherInstrument) -> None:
        pass


class TestInstrumentRegistry:

    def test_sequence(self):
        # Arrange
        instrum = MockInstrument()
        other = OtherInstrument()
        # Act
        registry = InstrumentRegistry(instrum, other)
        # Assert
        assert len(registry) == 2
        assert registry[1] is other
        assert list(registry) == [instrum, other]

    def test_lookup_by_exact_type(self):
        # Arrange
        instrum = MockInstrument()
        registry = InstrumentRegistry(OtherInstrument(), instrum)
        # Act + Assert
        assert registry.lookup(MockInstrument) is instrum

    def test_subclass_does_not_match(self):
        # Arrange
        class SubInstrument(MockInstrument):
            pass

        registry = InstrumentRegistry(SubInstrument())
        # Act + Assert
        assert registry.lookup(MockInstrument) is None

    def test_missing_required(self):
        # Arrange
        registry = InstrumentRegistry()
        # Act + Assert
        with pytest.raises(KeyError):
            registry.lookup(MockInstrument, required=True)

    def test_first_of_a_type_wins(self):
        # Arrange
        first, second = MockInstrument(), MockInstrument()
        # Act
        registry = InstrumentRegistry(first, second)
        # Assert
        assert registry.lookup(MockInstrument) is first

    def test_repr(self):
        # Act + Assert
        assert repr(InstrumentRegistry(1, 2, "a")) == (
            "InstrumentRegistry(types=2)"
        )


class TestBasicDispatcher:

    def test_is_dispatcher(self):
        # Act + Assert
        assert isinstance(BasicDispatcher(), DispatcherProtocol)

    def test_dispatch_calls_announcement(self):
        # Arrange
        instrum = MockInstrument()
        observation = MockObservation()
        # Act
        BasicDispatcher(instrum).dispatch(observation)
        # Assert
        assert instrum.calls == [("foo", observation)]

    def test_missing_optional_instrument_is_skipped(self):
        # Arrange
        dispatcher = BasicDispatcher(logging.getLogger("test.dispatch"))
        # Act + Assert
        dispatcher.dispatch(MockObservation())

    def test_missing_required_instrument(self):
        # Arrange
        instrum = MockInstrument()
        dispatcher = BasicDispatcher(instrum)
        # Act
        with pytest.raises(ReqInstrumException) as exc_info:
            dispatcher.dispatch(MockObservationWithRequired())
        # Assert
        assert exc_info.value.method_name == "needs_other"
        assert exc_info.value.req_instrum is OtherInstrument
        assert exc_info.value.instrum_imps == (instrum,)
        assert "`OtherInstrument`" in str(exc_info.value)
        assert (
            "`MockObservationWithRequired.needs_other(...)`"
            in str(exc_info.value)
        )

    def test_message_without_instruments(self):
        # Act
        with pytest.raises(ReqInstrumException) as exc_info:
            BasicDispatcher().dispatch(MockObservationWithRequired())
        # Assert
        assert str(exc_info.value).endswith("implementations: None")

    def test_equality(self):
        # Arrange
        instrum = MockInstrument()
        # Act + Assert
        assert BasicDispatcher(instrum) == BasicDispatcher(instrum)
        assert BasicDispatcher(instrum) != BasicDispatcher()
        assert BasicDispatcher(instrum) != object()

    def test_repr(self):
        # Arrange
        logger = logging.getLogger("test.repr")
        # Act + Assert
        assert repr(BasicDispatcher(logger)) == (
            f"BasicDispatcher(instruments=({repr(logger)!r},))"
        )
