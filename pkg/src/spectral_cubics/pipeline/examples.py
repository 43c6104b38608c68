"""Example generators 示例生成器

Ready-to-analyze documents for three constructions:
- nest-theta: Θ·L·Q + ε·L1⋯L5, a nest whose theta-conic touches it at five points
- c3i-nodal: v·f2 + L1·L2·L3, a one-nodal cubic whose quadrocubic is three disjoint ellipses
- segre6: a 6-nodal Segre cubic from a (2,1) + (1,2) quadrocubic on xy = zw
三种构造的可直接分析的文档
"""

from fractions import Fraction
from typing import Callable, Optional, Union

from ..algebra import RatPoly
from ..errors import CertificationFailure, InputError, SpectralCubicsError
from ..models.config import AnalysisSettings
from ..models.documents import CubicDocument, CurveDocument, parse_rational
from ..threefold import (
    PLANE_VARS,
    THREEFOLD_VARS,
    quadrocubic,
    quadrocubic_singular_points,
    segre_quadrocubic,
)
from ..threefold.nodal import DEFAULT_F12, DEFAULT_F21, NODE_VARS
from ..topology import topology
from ..utils.logger import logger

ExampleDocument = Union[CubicDocument, CurveDocument]
Builder = Callable[[dict[str, str], AnalysisSettings], ExampleDocument]

# Times a class code must repeat before ε is accepted 接受 ε 前类代码需重复的次数
STABLE_REPEATS = 2


def _rational(params: dict[str, str], key: str, default: str) -> Fraction:
    try:
        return parse_rational(params.get(key, default))
    except ValueError as e:
        raise InputError(str(e), parameter=key) from e


def _check_keys(params: dict[str, str], allowed: set[str]) -> None:
    unknown = sorted(set(params) - allowed)
    if unknown:
        raise InputError(
            f"unknown parameter {unknown[0]}",
            allowed=",".join(sorted(allowed)),
        )


def _var(name: str) -> RatPoly:
    return RatPoly.var(name, PLANE_VARS)


# ─── ε search ───


def epsilon_search(
    family: Callable[[Fraction], RatPoly], settings: AnalysisSettings
) -> tuple[Fraction, str, int]:
    """Halve ε until the class code of the member repeats twice in a row
    逐次减半 ε，直到成员的类代码连续重复两次

    Returns the largest ε of the stable run, its class code and the rounds used.
    返回稳定段中最大的 ε、其类代码与所用轮数。

    Raises:
        CertificationFailure: no stable run within epsilon_rounds 轮数内未稳定
    """
    eps = parse_rational(settings.epsilon_start)
    previous: Optional[str] = None
    run_start = eps
    repeats = 0
    for round_no in range(1, settings.epsilon_rounds + 1):
        try:
            code: Optional[str] = topology(family(eps), settings=settings).class_code
        except SpectralCubicsError as e:
            code = None
            logger.debug("Epsilon rejected", {"epsilon": eps, "error": e.code})
        if code is not None and code == previous:
            repeats += 1
        else:
            repeats = 0
            run_start = eps
        logger.debug("Epsilon step", {"epsilon": eps, "class": code, "repeats": repeats})
        if repeats == STABLE_REPEATS:
            return run_start, code, round_no
        previous = code
        eps /= 2
    raise CertificationFailure(
        "topology did not stabilize while halving epsilon", rounds=settings.epsilon_rounds
    )


# ─── nest-theta ───


def _tangent_at(t: Fraction) -> RatPoly:
    """Tangent to x² + y² = z² at the rational point of parameter t 参数 t 处的切线"""
    a = (1 - t * t) / (1 + t * t)
    b = 2 * t / (1 + t * t)
    return _var("x").scale(a) + _var("y").scale(b) - _var("z")


def nest_family(
    radius: Fraction = Fraction(2), slope: Fraction = Fraction(1, 2), sign: int = 1
) -> tuple[Callable[[Fraction], RatPoly], RatPoly]:
    """The family ε ↦ Θ·L·Q + sign·ε·L1⋯L5 and its conic Θ 曲线族及其二次曲线

    Θ is the unit circle, Q the concentric circle of the given radius and L the line at
    infinity z = 0; the Li are tangents to Θ at (±1, 0), (0, ±1) and at the point of parameter
    slope. On Θ the perturbation vanishes doubly at the five tangency points.

    Raises:
        InputError: radius not above 1 or a repeated tangency point 半径不大于 1 或切点重复
    """
    if radius <= 1:
        raise InputError("the outer circle needs radius above 1", radius=str(radius))
    if slope in (0, 1, -1):
        raise InputError("slope must not repeat a tangency point at (±1, 0) or (0, ±1)")
    if sign not in (1, -1):
        raise InputError("sign must be + or -")
    x, y, z = _var("x"), _var("y"), _var("z")
    theta = x * x + y * y - z * z
    q = x * x + y * y - (z * z).scale(radius * radius)
    base = theta * z * q
    tangents = [x - z, y - z, -x - z, -y - z, _tangent_at(slope)]
    product = tangents[0]
    for form in tangents[1:]:
        product = product * form

    def member(eps: Fraction) -> RatPoly:
        return base + product.scale(sign * eps)

    return member, theta


def nest_theta(params: dict[str, str], settings: AnalysisSettings) -> CurveDocument:
    """nest-theta: quintic and conic, ε from the halving search unless given
    nest-theta：五次曲线与二次曲线，未给定时 ε 由减半搜索确定
    """
    _check_keys(params, {"radius", "slope", "sign", "epsilon"})
    radius = _rational(params, "radius", "2")
    slope = _rational(params, "slope", "1/2")
    sign = -1 if params.get("sign", "+") == "-" else 1
    member, theta = nest_family(radius, slope, sign)
    parameters = {
        "family": "nest-theta",
        "radius": str(radius),
        "slope": str(slope),
        "sign": "+" if sign > 0 else "-",
    }
    if "epsilon" in params:
        eps = _rational(params, "epsilon", "1/10")
        if eps <= 0:
            raise InputError("epsilon must be positive", epsilon=str(eps))
        parameters.update({"epsilon": str(eps), "epsilon_search": "fixed"})
    else:
        eps, code, rounds = epsilon_search(member, settings)
        parameters.update(
            {
                "epsilon": str(eps),
                "epsilon_search": (
                    f"halving from {settings.epsilon_start}, class stable {STABLE_REPEATS} times"
                ),
                "epsilon_rounds": str(rounds),
                "stable_class": code,
            }
        )
    logger.info("Example built", {"family": "nest-theta", "epsilon": parameters["epsilon"]})
    return CurveDocument(curve=str(member(eps)), conic=str(theta), parameters=parameters)


# ─── c3i-nodal ───


def c3i_cubic(slopes: tuple[Fraction, Fraction, Fraction]) -> RatPoly:
    """v·(x² + y² − z² − u²) + (z − k1·u)(z − k2·u)(z − k3·u)

    The planes z = k·u lie in the pencil through z = u = 0, a line missing the real quadric.
    这些平面属于过 z = u = 0 的平面束，该直线与实二次曲面不相交。
    """
    if len(set(slopes)) != 3:
        raise InputError("the three planes must be distinct", slopes=[str(k) for k in slopes])
    x, y, z, u, v = (RatPoly.var(n, THREEFOLD_VARS) for n in THREEFOLD_VARS)
    f2 = x * x + y * y - z * z - u * u
    planes = z - u.scale(slopes[0])
    for k in slopes[1:]:
        planes = planes * (z - u.scale(k))
    return v * f2 + planes


def c3i_nodal(params: dict[str, str], settings: AnalysisSettings) -> CubicDocument:
    """c3i-nodal: the marked line joins the node to a point of the first ellipse
    c3i-nodal：标记直线连接节点与第一个椭圆上的点
    """
    _check_keys(params, {"slopes"})
    try:
        slopes = tuple(parse_rational(k) for k in params.get("slopes", "0,1,-1").split(","))
    except ValueError as e:
        raise InputError(str(e), parameter="slopes") from e
    if len(slopes) != 3:
        raise InputError("slopes needs three values", slopes=params.get("slopes"))
    cubic = c3i_cubic(slopes)  # type: ignore[arg-type]
    node = [Fraction(0)] * 4 + [Fraction(1)]
    nd = quadrocubic(cubic, node)
    if nd.real_signature != (2, 2):
        raise CertificationFailure("node is not of signature (2,2)", signature=nd.real_signature)
    # x² + y² = k² + 1 on the plane z = k·u at u = 1 平面 z = k·u 上的有理点
    k = slopes[0]
    point = [k, Fraction(1), k, Fraction(1), Fraction(0)]
    parameters = {
        "family": "c3i-nodal",
        "slopes": ",".join(str(s) for s in slopes),
        "node": "0,0,0,0,1",
        "signature": "(2,2)",
    }
    logger.info("Example built", {"family": "c3i-nodal"})
    return CubicDocument(
        variables=list(THREEFOLD_VARS),
        cubic=str(cubic),
        line=[[str(c) for c in point], [str(c) for c in node]],
        parameters=parameters,
    )


# ─── segre6 ───


def _component_point(form: RatPoly) -> list[Fraction]:
    """A rational point of a (2,1) component, in (x, y, z, w) (2,1) 分支上的有理点"""
    for k in range(8):
        line = form.specialize({"s0": 1, "s1": k}, ("t0", "t1"))
        a = line.coefficient((1, 0))
        b = line.coefficient((0, 1))
        if a == 0 and b == 0:
            continue
        t0, t1 = b, -a
        s0, s1 = Fraction(1), Fraction(k)
        return [s0 * t0, s1 * t1, s0 * t1, s1 * t0]
    raise CertificationFailure("no rational point found on the (2,1) component")


def segre6(params: dict[str, str], settings: AnalysisSettings) -> CubicDocument:
    """segre6: 6-nodal Segre cubic, marked line through the node and a second node when rational
    segre6：6 节点 Segre 三次型，标记直线尽量经过第二个节点
    """
    _check_keys(params, {"F21", "F12"})
    nd = segre_quadrocubic(params.get("F21"), params.get("F12"))
    singular = quadrocubic_singular_points(nd)
    binodal = bool(singular.rational_points)
    assert nd.components is not None
    point = singular.rational_points[0] if binodal else _component_point(nd.components[0])
    node = [Fraction(0)] * 4 + [Fraction(1)]
    parameters = {
        "family": "segre6",
        "F21": params.get("F21", DEFAULT_F21),
        "F12": params.get("F12", DEFAULT_F12),
        "quadric": "x*y - z*w",
        "singular_points": str(singular.count),
        "real_singular_points": str(singular.real_count),
        "binodal": str(binodal).lower(),
    }
    logger.info("Example built", {"family": "segre6", "binodal": binodal})
    return CubicDocument(
        variables=list(NODE_VARS),
        cubic=str(nd.cubic()),
        line=[[str(c) for c in point] + ["0"], [str(c) for c in node]],
        parameters=parameters,
    )


EXAMPLES: dict[str, Builder] = {
    "nest-theta": nest_theta,
    "c3i-nodal": c3i_nodal,
    "segre6": segre6,
}


def build_example(
    name: str, params: Optional[dict[str, str]] = None, settings: Optional[AnalysisSettings] = None
) -> ExampleDocument:
    """Build a named example document 构建指定名称的示例文档

    Raises:
        InputError: unknown example or parameter 未知示例或参数
    """
    builder = EXAMPLES.get(name)
    if builder is None:
        raise InputError(f"unknown example {name}", known=",".join(EXAMPLES))
    return builder(dict(params or {}), settings or AnalysisSettings())

