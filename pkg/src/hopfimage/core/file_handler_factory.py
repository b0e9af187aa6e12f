# file_handler_factory.py
from pathlib import Path

from ..file_handlers import (
    JSONFileHandler,
    JSONGZFileHandler,
    ZSTFileHandler,
)

from .base_file_handler import BaseFileHandler
from .exceptions import ProcessingError


class FileHandlerFactory:
    _handlers_registry = {
        'json': JSONFileHandler,
        'json.gz': JSONGZFileHandler,
        'json.zst': ZSTFileHandler,
        'zst': ZSTFileHandler,
    }

    @staticmethod
    def register_file_handler(file_extension: str, handler_class):
        """
        Registers a handler class for a file extension (without the leading dot).
        """
        FileHandlerFactory._handlers_registry[file_extension] = handler_class

    @staticmethod
    def file_extension(file_path: str) -> str:
        # longest registered multi-part suffix wins: data.json.gz -> json.gz
        suffixes = [s[1:].lower() for s in Path(file_path).suffixes]
        for start in range(len(suffixes)):
            candidate = '.'.join(suffixes[start:])
            if candidate in FileHandlerFactory._handlers_registry:
                return candidate
        return suffixes[-1] if suffixes else ''

    @staticmethod
    def create_file_handler(file_path: str) -> BaseFileHandler:
        """
        Instantiates the handler registered for the file's extension.
        """
        file_extension = FileHandlerFactory.file_extension(file_path)
        handler_class = FileHandlerFactory._handlers_registry.get(file_extension)
        if handler_class:
            return handler_class(file_path)
        raise ProcessingError(f"{file_path}: unsupported file type '{file_extension}'")


def load_document(file_path: str):
    """Reads and parses a JSON document with the handler matching its extension."""
    return FileHandlerFactory.create_file_handler(file_path).load_document()
