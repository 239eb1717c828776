class GadgetException(Exception):
    """Base exception for all exceptions inside the undecidability gadgets."""

    pass


class UnknownRecordError(GadgetException):
    """Exception used when a stack symbol is not the record of a machine transition."""

    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(f"Stack symbol {symbol} does not record a machine transition")


class MissingMachineError(GadgetException):
    """Exception used when a gadget output is asked for a machine its construction does not produce."""

    def __init__(self, construction: str, machine: str):
        super().__init__(f"The {construction} construction produces no {machine}")
