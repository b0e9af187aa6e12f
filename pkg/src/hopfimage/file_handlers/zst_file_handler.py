import io
import zstandard as zstd
from hopfimage.core.base_file_handler import BaseFileHandler


class ZSTFileHandler(BaseFileHandler):
    """
    ZSTFileHandler reads a Zstandard-compressed JSON document (.zst or .json.zst).
    Large d×d grids of projections compress well, so models are often stored this way.
    """

    def read_file(self) -> str:
        with open(self.file_path, 'rb') as fh:
            dctx = zstd.ZstdDecompressor()
            try:
                with dctx.stream_reader(fh) as reader:
                    text_stream = io.TextIOWrapper(reader, encoding='utf-8')
                    return text_stream.read()
            except zstd.ZstdError as e:
                raise OSError(f"corrupt zstandard stream: {e}") from e
