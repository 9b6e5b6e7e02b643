import hashlib
import json

from typeguard import typechecked


class HashGenerator:
    @staticmethod
    @typechecked
    def sha256_from_list(hash_list: list) -> str:
        """Hash a list of strings using SHA256.

        Sorts the list and concatenates the values to a single string, which is
        hashed using SHA256.

        Args:
            hash_list (list): List of strings to concatenate and hash.

        Returns:
            str: SHA256 hash of the concatenated list.
        """
        sorted_hashes = sorted(hash_list)
        concatenated = "".join(sorted_hashes)
        return hashlib.sha256(concatenated.encode()).hexdigest()

    @staticmethod
    @typechecked
    def sha256_from_dict(document: dict) -> str:
        """Hash of the canonical JSON form of a document (sorted keys, no whitespace).

        Args:
            document: A JSON serialisable dict, e.g. the instance given to a command.

        Returns:
            str: SHA256 hash of the canonical serialisation.
        """
        canonical = json.dumps(document, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode()).hexdigest()

    @staticmethod
    @typechecked
    def run_hash(command: str, seed: int, input_hash: str) -> str:
        """Identifies a run by its command, seed and input."""
        return HashGenerator.sha256_from_list([f"command={command}", f"seed={seed}", f"input={input_hash}"])
