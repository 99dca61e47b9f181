# File: run_manifest.py
# Description: Run manifest embedded in every report.
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from datetime import datetime
from zoneinfo import ZoneInfo

from syrlab import __version__
from syrlab.experiment.hash_service import HashService, HashType
from syrlab.output.handler.json_handler import JsonHandler


class RunManifest:
    """
    Represents the manifest of one CLI run.

    The manifest is stored as a dictionary with two main components:
      - 'metadata': subcommand, parameters, seed, version tag, timestamps and the output digest.
      - 'contents': the report body.

    The digest covers the canonical JSON of everything except the timestamps, so two runs with the same
    subcommand, parameters, seed and version produce the same digest.
    """

    _timestamp_keys = ('started_iso', 'finished_iso')

    def __init__(self, subcommand: str, parameters: dict, seed: int = None) -> None:
        self._manifest = dict()
        self._set_defaults()
        self._manifest['metadata'].update({
            'subcommand': subcommand,
            'parameters': dict(parameters),
            'seed': seed,
            'version': __version__,
            'started_iso': RunManifest._now_iso(),
        })

    def _set_defaults(self) -> None:
        self._manifest = {
            'metadata': {},
            'contents': {}
        }

    @staticmethod
    def _now_iso() -> str:
        """
        :return: str, ISO 8601 UTC timestamp, for example '2025-04-07T08:58:03.120000+00:00'
        """

        return datetime.now(ZoneInfo('UTC')).isoformat()

    @property
    def metadata(self) -> dict:
        return self._manifest['metadata']

    @property
    def contents(self) -> dict:
        return self._manifest['contents']

    def digest_body(self) -> str:
        """
        :return: str, canonical JSON of the manifest without timestamps and digest
        """

        metadata = {key: value for key, value in self.metadata.items()
                    if key not in RunManifest._timestamp_keys and key != 'output_digest'}
        return JsonHandler.canonical_dumps({'metadata': metadata, 'contents': self.contents})

    def finish(self, contents: dict) -> dict:
        """
        Attach the report body, stamp the end time and compute the digest.

        :param contents: dict, report body
        :return: dict, the manifest
        """

        self._manifest['contents'] = contents
        self.metadata['finished_iso'] = RunManifest._now_iso()
        self.metadata['output_digest'] = HashService.calculate_text_hash(self.digest_body(), HashType.HASH_TYPE_SHA256)

        return self._manifest

    def to_dict(self) -> dict:
        return self._manifest
