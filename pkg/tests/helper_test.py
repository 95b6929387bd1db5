import pytest

from gemlp.exceptions import GemlpConfigurationException, GemlpException
from gemlp.helper import safe_load_yaml, string_to_float_list, string_to_int_list


def test_if_string_is_converted_to_int_list():
    assert string_to_int_list('2,16, 16,1') == [2, 16, 16, 1]
    assert string_to_int_list([1, 2]) == [1, 2]


def test_if_string_is_converted_to_float_list():
    assert string_to_float_list('-1.5,-1') == [-1.5, -1.0]
    assert string_to_float_list('') == []


@pytest.mark.parametrize('function', [string_to_int_list, string_to_float_list])
def test_if_invalid_number_raises_exception(function):
    with pytest.raises(GemlpConfigurationException, match='Expected comma separated'):
        function('1,two')


def test_if_broken_yaml_raises_exception(tmp_path):
    path = tmp_path / 'broken.yaml'
    path.write_text('key: [value\n')
    with pytest.raises(GemlpException, match='Cannot load data from yaml file'):
        safe_load_yaml(path)
