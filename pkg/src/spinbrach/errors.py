class SpinGeometryError(ValueError):
    """Base class for domain failures (as opposed to malformed arguments)."""


class OffManifoldError(SpinGeometryError):
    def __init__(self, fidelity: float):
        super().__init__(f"state off manifold (fidelity {fidelity:.12g})")
        self.fidelity = fidelity


class UnreachableTargetError(SpinGeometryError):
    def __init__(self, detail: str = ""):
        msg = "target outside rotation circle"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class NoCompatibleFieldError(SpinGeometryError):
    def __init__(self, detail: str = ""):
        msg = "no field at this tilt reaches the target"
        super().__init__(f"{msg}: {detail}" if detail else msg)
