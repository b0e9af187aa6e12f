import gzip
from hopfimage.core.base_file_handler import BaseFileHandler


class JSONGZFileHandler(BaseFileHandler):
    """
    JSONGZFileHandler reads a gzip-compressed .json.gz document.
    """

    def read_file(self) -> str:
        with gzip.open(self.file_path, 'rt', encoding='utf-8') as file:
            return file.read()
