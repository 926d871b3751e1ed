from src.wsdl.flatten import flatten
from src.wsdl.model import FlattenedParamSet, NodeKind, OperationDef, ParamNode, ServiceDescription
from src.wsdl.parser import parse_wsdl, parse_wsdl_file

__all__ = [
    "FlattenedParamSet",
    "NodeKind",
    "OperationDef",
    "ParamNode",
    "ServiceDescription",
    "flatten",
    "parse_wsdl",
    "parse_wsdl_file",
]
