from .json_file_handler import JSONFileHandler
from .json_gz_file_handler import JSONGZFileHandler
from .zst_file_handler import ZSTFileHandler
