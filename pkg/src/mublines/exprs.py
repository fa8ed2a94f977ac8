"""Tiny constant-expression parser for CLI arguments.

Accepts +, -, *, /, sqrt(...), the imaginary unit i, parentheses, and
numeric literals; e.g. "sqrt(2+sqrt(5))", "(sqrt(6)-sqrt(2))/2", "2+i".
"""

from __future__ import annotations

import ast
import cmath


class ExpressionError(ValueError):
    pass


def parse_constant(text: str) -> complex:
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse constant {text!r}") from exc
    return _eval(tree.body, text)


def _eval(node: ast.AST, text: str) -> complex:
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        return complex(node.value)
    if isinstance(node, ast.Name) and node.id == "i":
        return 1j
    if isinstance(node, ast.UnaryOp):
        value = _eval(node.operand, text)
        if isinstance(node.op, ast.USub):
            return -value
        if isinstance(node.op, ast.UAdd):
            return value
    if isinstance(node, ast.BinOp):
        left = _eval(node.left, text)
        right = _eval(node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if right == 0:
                raise ExpressionError(f"division by zero in {text!r}")
            return left / right
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id == "sqrt"
        and len(node.args) == 1
        and not node.keywords
    ):
        return cmath.sqrt(_eval(node.args[0], text))
    raise ExpressionError(f"unsupported syntax in constant {text!r}")
