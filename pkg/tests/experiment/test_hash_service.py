# File: test_hash_service.py
# Description: Unit tests for the HashType and HashService classes.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from hashlib import sha256
import os
import pytest
import tempfile

from syrlab.experiment.hash_service import HashType, HashService


TEST_CONTENT = "This is a test file content for hashing."
EXPECTED_SHA256 = '730d388b796882f7ae83e0733272094f491b276da07c06372e1d87e19f8190a7'

def test_enum():
    """
    Test that the value of the enumeration has the expected value.
    """
    assert HashType.HASH_TYPE_SHA256.value == 'SHA256'
    assert len(HashType) == 1

@pytest.mark.parametrize("hash_type, expected_is_allowed", [
    (HashType.HASH_TYPE_SHA256, True),
    ('SHA512', False),
    ('SHA256', False),
    (1337, False),
])
def test_is_hash_type_allowed(hash_type, expected_is_allowed):
    """
    Test the is_hash_type_allowed method.
    """
    assert HashService.is_hash_type_allowed(hash_type) == expected_is_allowed

@pytest.mark.parametrize("hash_type, expected_encoder, expected_encoder_name", [
    (HashType.HASH_TYPE_SHA256, sha256(), 'sha256'),
])
def test_get_hash_encoder_instance(hash_type, expected_encoder, expected_encoder_name):
    """
    Test the _get_hash_encoder_instance method.
    """
    encoder = HashService._get_hash_encoder_instance(hash_type)
    assert isinstance(encoder, type(expected_encoder))
    assert encoder.name == expected_encoder_name

@pytest.mark.parametrize("hash_type, expected_hash_key", [
    (HashType.HASH_TYPE_SHA256, EXPECTED_SHA256),
])
def test_calculate_text_hash(hash_type, expected_hash_key):
    """
    Test the calculate_text_hash method for the SHA256 digest.
    """
    assert HashService.calculate_text_hash(TEST_CONTENT, hash_type) == expected_hash_key

def test_calculate_text_hash_raise_hash_type_unknown():
    """
    Test the calculate_text_hash method when the hash type is unknown.
    """
    with pytest.raises(ValueError):
        HashService.calculate_text_hash(TEST_CONTENT, 1337)

@pytest.mark.parametrize("buffer_size", [None, 1, 16, 65536])
def test_calculate_file_hash(buffer_size):
    """
    Test the calculate_file_hash method for a range of buffer sizes.
    """
    with tempfile.NamedTemporaryFile(delete=False) as temp_file:
        temp_file.write(TEST_CONTENT.encode('utf-8'))
        temp_file_path = temp_file.name

    try:
        if buffer_size is None:
            hash_key = HashService.calculate_file_hash(temp_file_path)
        else:
            hash_key = HashService.calculate_file_hash(temp_file_path, file_buffer_size=buffer_size)
        assert hash_key == EXPECTED_SHA256
    finally:
        os.remove(temp_file_path)

@pytest.mark.parametrize("file_buffer_size", [0, -1])
def test_calculate_file_hash_raise_file_buffer_size_not_positive(file_buffer_size):
    """
    Test the calculate_file_hash method when the file buffer size is not positive.
    """
    with pytest.raises(ValueError):
        HashService.calculate_file_hash(__file__, file_buffer_size=file_buffer_size)

def test_calculate_file_hash_raise_file_not_found():
    """
    Test the calculate_file_hash method when the path is a directory or missing.
    """
    directory = os.path.dirname(__file__)
    with pytest.raises(FileNotFoundError):
        HashService.calculate_file_hash(directory)
    with pytest.raises(FileNotFoundError):
        HashService.calculate_file_hash(os.path.join(directory, 'not_found_report.json'))
