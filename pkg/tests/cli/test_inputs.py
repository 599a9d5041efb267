"""Tests for data file reading."""

import pytest

from intervallum.cli.inputs import read_sample, read_values
from intervallum.errors import InputError
from intervallum.sampling import AlternativeFamily, cdf


def write(tmp_path, text):
    path = tmp_path / "data.txt"
    path.write_text(text)
    return path


class TestReadValues:
    """Line-oriented numeric files."""

    def test_comments_and_blank_lines(self, tmp_path):
        path = write(tmp_path, "# header\n0.25\n\n  0.5  \n# note\n1e-1\n")
        assert read_values(path) == [0.25, 0.5, 0.1]

    @pytest.mark.parametrize(
        "text, match",
        [
            ("", "holds no values"),
            ("# only a comment\n", "holds no values"),
            ("0.1\nseven\n", "not a number"),
            ("0.1\nnan\n", "finite"),
            ("inf\n", "finite"),
        ],
    )
    def test_malformed(self, tmp_path, text, match):
        with pytest.raises(InputError, match=match):
            read_values(write(tmp_path, text))

    def test_line_number_in_error(self, tmp_path):
        with pytest.raises(InputError) as info:
            read_values(write(tmp_path, "0.1\n0.2\nx\n"))
        assert info.value.details == {"line": 3}

    def test_missing(self, tmp_path):
        with pytest.raises(InputError, match="cannot read"):
            read_values(tmp_path / "missing.txt")


class TestReadSample:
    """Null-scale samples."""

    def test_unit_interval(self, tmp_path):
        assert read_sample(write(tmp_path, "0\n0.5\n1\n")).values == (0.0, 0.5, 1.0)

    def test_out_of_range_is_rejected(self, tmp_path):
        with pytest.raises(InputError, match="--null"):
            read_sample(write(tmp_path, "0.5\n-0.25\n"))

    def test_probability_integral_transform(self, tmp_path):
        family = AlternativeFamily.from_spec("A:2")
        sample = read_sample(write(tmp_path, "0.1\n0.3\n"), "A:2")
        assert sample.values == pytest.approx(tuple(float(cdf(family, x)) for x in (0.1, 0.3)))

    def test_out_of_support_with_null_names_the_family(self, tmp_path):
        with pytest.raises(InputError, match="support of --null 'A:2'") as caught:
            read_sample(write(tmp_path, "0.5\n1.5\n"), "A:2")
        assert "pass --null" not in caught.value.message
