import logging

from orthocode.probes.announcement import (
    METADATA_ATTR,
    AnnouncementEntry,
    announcement,
    entries,
)


class MockInstrument:
    pass


class TestAnnouncement:

    def test_records_entry(self):
        # Arrange
        def method(self, instrument):
            pass

        # Act
        decorated = announcement(MockInstrument)(method)
        # Assert
        assert decorated is method
        assert list(entries(method)) == [
            AnnouncementEntry(MockInstrument, False)
        ]

    def test_stacked_decorators(self):
        # Act
        @announcement(logging.Logger)
        @announcement(MockInstrument, required=True)
        def method(self, instrument):
            pass

        # Assert
        assert list(entries(method)) == [
            AnnouncementEntry(MockInstrument, True),
            AnnouncementEntry(logging.Logger, False),
        ]

    def test_undecorated_method_has_no_entries(self):
        # Arrange
        def method(self):
            pass

        # Act + Assert
        assert not list(entries(method))
        assert not hasattr(method, METADATA_ATTR)

    def test_repr(self):
        # Act + Assert
        assert repr(announcement(MockInstrument)) == (
            f"announcement(instrument={MockInstrument!r})"
        )
