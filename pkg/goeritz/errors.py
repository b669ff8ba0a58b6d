"""
Exceptions raised by the word parsers and the desk-scale caps
"""


class WordParseError(ValueError):
    def __init__(self, text, position, alphabet):
        self.text = text
        self.position = position
        self.alphabet = alphabet
        super().__init__(
            f"Bad letter {text[position]!r} at position {position} in {text!r} "
            f"(allowed: {alphabet})"
        )


class ResourceBoundError(RuntimeError):
    """A desk-scale cap (radius, branch bound, oracle size) was exceeded."""
