import logging

from orthocode.probes.announcement import announcement
from orthocode.probes.observation import BaseObservation, ObservationProtocol


class MockInstrument:
    pass


class TwoAnnouncements(BaseObservation):

    @announcement(logging.Logger)
    def log(self, logger):
        pass

    @announcement(MockInstrument)
    def audit(self, instrument):
        pass

    def helper(self):
        pass


class NoAnnouncements(BaseObservation):
    pass


class TestBaseObservation:

    def test_lists_decorated_methods_by_name(self):
        # Act
        found = TwoAnnouncements.announcements()
        # Assert
        assert [name for name, _ in found] == ["audit", "log"]
        assert found[1][1] is TwoAnnouncements.log

    def test_result_is_cached_per_class(self):
        # Act
        first = TwoAnnouncements.announcements()
        # Assert
        assert TwoAnnouncements.announcements() is first
        assert NoAnnouncements.announcements() == ()

    def test_subclass_inherits_announcements(self):
        # Arrange
        class Child(TwoAnnouncements):
            pass

        # Act + Assert
        assert len(Child.announcements()) == 2

    def test_len_and_repr(self):
        # Act
        observation = TwoAnnouncements()
        # Assert
        assert len(observation) == 2
        assert repr(observation) == "TwoAnnouncements(announcements=2)"

    def test_satisfies_protocol(self):
        # Act + Assert
        assert isinstance(NoAnnouncements(), ObservationProtocol)
