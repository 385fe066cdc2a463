import pytest


class TestConfig:
    def test_defaults(self, config):
        """ Test whether default configuration values are correct. """
        assert config.THREADS == 0
        assert config.MONOMIAL_ORDER == 'grevlex'
        assert config.MEMOIZE is True
        assert config.SUPPORT_CERTIFICATE == 'annihilator'
        assert config.MAX_TORSION_ORDER == 12

    @pytest.mark.parametrize('value, expected', [
        ('0', False),
        ('off', False),
        ('', False),
        ('1', True),
        ('yes', True),
        (0, False),
    ])
    def test_memoize_flag(self, config, value, expected):
        config.MEMOIZE = value
        assert config.MEMOIZE is expected

    def test_threads_from_string(self, config):
        config.THREADS = '4'
        assert config.THREADS == 4

    @pytest.mark.parametrize('name, value', [
        ('THREADS', -1),
        ('MONOMIAL_ORDER', 'revlex'),
        ('SUPPORT_CERTIFICATE', 'radical'),
        ('MAX_TORSION_ORDER', 0),
    ])
    def test_invalid_values(self, config, name, value):
        with pytest.raises(ValueError):
            setattr(config, name, value)

    def test_environment(self, monkeypatch):
        """ Values can be set through environment variables. """
        from charloci.config import Config

        monkeypatch.setenv('CHARLOCI_ORDER', 'lex')
        monkeypatch.setenv('CHARLOCI_THREADS', '2')
        config = Config()

        assert config.MONOMIAL_ORDER == 'lex'
        assert config.THREADS == 2
