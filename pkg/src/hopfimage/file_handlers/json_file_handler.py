from hopfimage.core.base_file_handler import BaseFileHandler


class JSONFileHandler(BaseFileHandler):
    """
    JSONFileHandler reads a plain UTF-8 .json document.
    """

    def read_file(self) -> str:
        with open(self.file_path, 'r', encoding='utf-8') as file:
            return file.read()
