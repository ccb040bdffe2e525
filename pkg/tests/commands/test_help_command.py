import pytest

from commands.command_enums import HelpSection
from commands.help_commands import HelpGenerator
from commands.loader import load_all_commands
from commands.registry import registry


class TestHelpCommand:
    def setup_method(self):
        load_all_commands()

    def test_overview(self, capsys):
        assert registry.handle_command(['help']) == 0
        out = capsys.readouterr().out
        assert out.startswith('KvN lab help\n')
        for section in HelpSection:
            assert f'help {section.value}' in out

    def test_no_command_shows_overview(self, capsys):
        assert registry.handle_command([]) == 0
        assert 'KvN lab help' in capsys.readouterr().out

    @pytest.mark.parametrize('topic,expected', [
        ('algebra', 'verify-algebra [--ndof NDOF]'),
        ('simulation', 'simulate <scenario> [--out OUT] [--resume] (aliases: sim)'),
        ('ANALYSIS', 'compare <a> <b> [--tol TOL] [--expect-different]'),
        ('configure', 'settings [key] [value]'),
        ('misc', 'help [section]'),
    ])
    def test_section(self, capsys, topic, expected):
        assert registry.handle_command(['help', topic]) == 0
        assert expected in capsys.readouterr().out

    def test_unknown_topic(self, capsys):
        assert registry.handle_command(['help', 'vote']) == 2
        assert 'Unknown help topic: vote' in capsys.readouterr().err

    def test_every_section_has_info(self):
        assert set(HelpGenerator.SECTION_INFO) == set(HelpSection)

    def test_empty_section_message(self):
        state = registry.save_state()
        try:
            registry.clear()
            assert 'No commands are available' in HelpGenerator.create_section_help(HelpSection.ALGEBRA)
        finally:
            registry.restore_state(state)
