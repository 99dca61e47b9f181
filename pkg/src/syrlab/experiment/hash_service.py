# File: hash_service.py
# Description: Hash services for report digests.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from enum import Enum
import os
from hashlib import sha256


class HashType(Enum):
    """
    Hash encoding categories.

    Attributes:
        HASH_TYPE_SHA256: the digest recorded in run manifests and logged for written reports.
    """

    HASH_TYPE_SHA256 = 'SHA256'


class HashService:
    """
    Digests of report text and report files.
    """

    _hash_type_encoder_map = {
        HashType.HASH_TYPE_SHA256: sha256,
    }

    @staticmethod
    def is_hash_type_allowed(hash_type: HashType) -> bool:
        """
        Check if the given hash type has an encoder.

        :param hash_type: HashType, hash type category
        :return: bool, True if the hash type is allowed, False otherwise
        """

        is_encoder_available = (hash_type in HashService._hash_type_encoder_map)
        return is_encoder_available

    @staticmethod
    def _get_hash_encoder_instance(hash_type: HashType):
        """
        Get a fresh encoder for the given hash type.

        :param hash_type: HashType, hash type category
        :return: _Hash, instance of the hash encoder

        :raises ValueError: if the hash type does not match a supported encoder
        """

        if not HashService.is_hash_type_allowed(hash_type):
            raise ValueError('hash type must be an allowed value')

        return HashService._hash_type_encoder_map[hash_type]()

    @staticmethod
    def calculate_text_hash(text: str, hash_type: HashType = HashType.HASH_TYPE_SHA256) -> str:
        """
        Calculate the hash of a canonical report body.

        :param text: str, encoded as UTF-8 before hashing
        :param hash_type: HashType, hash type category
        :return: str, hexadecimal digest

        :raises ValueError: if the hash type is not supported
        """

        hash_encoder = HashService._get_hash_encoder_instance(hash_type)
        hash_encoder.update(text.encode('utf-8'))

        return hash_encoder.hexdigest()

    @staticmethod
    def calculate_file_hash(file_path: str, hash_type: HashType = HashType.HASH_TYPE_SHA256,
                            file_buffer_size: int = 65536) -> str:
        """
        Calculate the hash of a written report.

        :param file_path: str, path to the file
        :param hash_type: HashType, hash type category
        :param file_buffer_size: int, size of the read buffer
        :return: str, hexadecimal digest

        :raises ValueError: if the buffer size is invalid or the hash type is not supported
        :raises FileNotFoundError: If the file is not found.
        """

        if file_buffer_size <= 0:
            raise ValueError('buffer size must be positive')

        hash_encoder = HashService._get_hash_encoder_instance(hash_type)

        if not os.path.isfile(file_path):
            raise FileNotFoundError('file not found')

        with open(file_path, 'rb') as file_handle:
            for buffer in iter(lambda: file_handle.read(file_buffer_size), b''):
                hash_encoder.update(buffer)

        return hash_encoder.hexdigest()
