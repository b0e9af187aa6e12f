# base_file_handler.py

import json
import logging
from abc import ABC, abstractmethod
from typing import Any

from .exceptions import ProcessingError


class BaseFileHandler(ABC):
    """
    Reads one JSON document (model, oracle or generator description) from disk.
    Subclasses only decide how raw text is obtained; parsing and diagnostics live here.
    """

    def __init__(self, file_path: str):
        self.file_path = str(file_path)

    @abstractmethod
    def read_file(self) -> str:
        """
        Returns the decoded text content of the file.
        """
        pass

    def load_document(self) -> Any:
        """
        Parses the file content, turning syntax errors into line-anchored diagnostics.
        """
        try:
            text = self.read_file()
        except (OSError, UnicodeDecodeError) as e:
            logging.error(f"Failed to read {self.file_path}: {e}")
            raise ProcessingError(f"{self.file_path}: cannot read file: {e}") from e
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            logging.error(f"JSON decoding error in file {self.file_path}: {e}")
            raise ProcessingError(f"{self.file_path}:{e.lineno}:{e.colno}: {e.msg}") from e
