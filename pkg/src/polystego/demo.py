"""The 11-pixel LCDM walk-through used by tests, doctests and ``polystego oracle --demo``.

>>> from polystego.codec import CoverImage, embed, extract
>>> from polystego.lcdm import DistortionMap, make_lcdm
>>> code = make_lcdm(11, 3)
>>> stego = embed(code, CoverImage(PIXELS), MESSAGE, "dffa", DistortionMap(COSTS))
>>> stego.pixels.tolist()
[163, 18, 153, 20, 100, 26, 15, 212, 242, 53, 86]
>>> extract(code, stego).tolist()
[1, 0, 1]
"""

PIXELS = (163, 18, 153, 20, 100, 26, 15, 212, 243, 53, 86)
MESSAGE = (1, 0, 1)
COSTS = (223, 3, 12, 4, 163, 43, 2, 12, 1, 23, 2)
STEGO_PIXELS = (163, 18, 153, 20, 100, 26, 15, 212, 242, 53, 86)
MSG_LEN = 3
