"""Embedded wavelet image codecs (SPIHT and STW) with PGM/PPM I/O and metrics."""

from ._wzc import (  # noqa: F401
    CoefficientPyramid,
    DecodedPyramid,
    EmbeddedStream,
    Pixmap,
    WzcError,
    compress,
    compression_ratio,
    decompress,
    forward_dwt_2d,
    inverse_dwt_2d,
    mse,
    psnr,
    read_pixmap,
    rgb_to_ycbcr,
    run_sweep,
    spiht_decode,
    spiht_encode,
    stw_decode,
    stw_encode,
    verify_published_tables,
    write_pixmap,
    ycbcr_to_rgb,
)

__all__ = [name for name in dir() if not name.startswith("_")]
