import pytest

from holescope.exceptions import (
    DegenerateProfileError,
    EstimatorError,
    HoleScopeError,
    ModelValidationError,
    ParameterInvalidError,
    SupportExhaustedError,
)


def test_holescope_error():
    """Test HoleScopeError raises with correct message."""
    with pytest.raises(HoleScopeError) as exc_info:
        raise HoleScopeError('A numerical error occurred')
    assert str(exc_info.value) == 'A numerical error occurred'


def test_parameter_invalid_error_with_hint():
    """Test ParameterInvalidError with hint."""
    parameter = 'log_eps'
    value = 1.0
    hint = 'Must be negative.'
    with pytest.raises(ParameterInvalidError) as exc_info:
        raise ParameterInvalidError(parameter, value, hint)
    assert exc_info.value.parameter == parameter
    assert exc_info.value.value == value
    assert exc_info.value.message == f'Invalid `{parameter}` parameter: {value}. {hint}'


def test_parameter_invalid_error_without_hint():
    """Test ParameterInvalidError without hint."""
    with pytest.raises(ParameterInvalidError) as exc_info:
        raise ParameterInvalidError('r', -1.0)
    assert exc_info.value.message == 'Invalid `r` parameter: -1.0.'


def test_model_validation_error():
    """Test ModelValidationError carries the offending index."""
    with pytest.raises(ModelValidationError) as exc_info:
        raise ModelValidationError('table', 'profile is not log-concave', 2)
    assert exc_info.value.index == 2
    assert exc_info.value.message == (
        'Coefficient model `table` rejected at n=2: profile is not log-concave'
    )


def test_model_validation_error_without_index():
    error = ModelValidationError('gef', 'no parameters expected')
    assert error.index is None
    assert 'at n=' not in error.message


def test_support_exhausted_error():
    error = SupportExhaustedError(50.0, 1024)
    assert error.r == 50.0
    assert error.limit == 1024
    assert 'n=1024' in str(error)


def test_degenerate_profile_error():
    error = DegenerateProfileError(1.0, 'The certificate')
    assert str(error).startswith('The certificate is undefined at r=1.0')


@pytest.mark.parametrize(
    'error',
    [
        ParameterInvalidError('x', 1),
        ModelValidationError('table', 'bad'),
        SupportExhaustedError(1.0, 1),
        DegenerateProfileError(1.0, 'S'),
        EstimatorError('no holes'),
    ],
)
def test_hierarchy(error):
    assert isinstance(error, HoleScopeError)
