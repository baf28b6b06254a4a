"""
FoldKappa app tests conversions test_files module
"""

import json

import pytest

from foldkappa.app.conversions import files


def test_read_yaml_file(tmp_path):
    """Test reading a YAML file"""
    path = tmp_path / 'content.yml'
    path.write_text('n: 5\nkind: fq\nnote: |\n  line 1\n  line 2\n')
    assert files.read_yaml_file(str(path)) == {'n': 5, 'kind': 'fq', 'note': 'line 1\nline 2\n'}
    with pytest.raises(ValueError):
        files.read_yaml_file(str(tmp_path / 'missing.yml'))
    with pytest.raises(ValueError):
        files.read_yaml_file(5)


def test_save_text_file(tmp_path):
    """Test saving a text file with LF line endings"""
    path = str(tmp_path / 'graph.txt')
    files.save_text_file(path, '0 1\n0 2\n')
    with open(path, 'rb') as f:
        assert f.read() == b'0 1\n0 2\n'
    with pytest.raises(OSError):
        files.save_text_file(str(tmp_path / 'missing_dir' / 'graph.txt'), '')


def test_to_json_line():
    """Test compact JSON lines with sorted keys"""
    line = files.to_json_line({'verdict': 'PASS', 'computed': 13, 'claim_id': 'a/b'})
    assert line == '{"claim_id":"a/b","computed":13,"verdict":"PASS"}'
    assert '\n' not in files.to_json_line({'note': 'x\ny'})
    assert json.loads(files.to_json_line([1, None, True])) == [1, None, True]


def test_csv_text():
    """Test rendering CSV text"""
    text = files.csv_text(('n', 'kind'), [(5, 'fq'), (4, 'q')])
    assert text == 'n,kind\n5,fq\n4,q\n'
    assert files.csv_text(('n',), []) == 'n\n'
    with pytest.raises(ValueError):
        files.csv_text(('n', 'kind'), [(5,)])
