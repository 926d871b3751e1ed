"""
WSDL 1.1 parser.

Only the abstract part of a WSDL is read: ``types`` (inline or imported XSD),
``message`` and ``portType``. Bindings, ports and service addresses are never
inspected, so two documents that differ only there parse to equal services.

Usage:
    from src.wsdl.parser import parse_wsdl_file

    service = parse_wsdl_file("weather.wsdl")
    for op in service.operations:
        print(op.name, len(list(op.input.leaves())))
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import BinaryIO

from lxml import etree

from src import constants
from src.errors import MalformedXml, NoOperations, NotWsdl, UnresolvableTypeRef
from src.logger import logger
from src.wsdl.model import OperationDef, ParamNode, ServiceDescription

WSDL = f"{{{constants.WSDL_NS}}}"
XSD = f"{{{constants.XSD_NS}}}"

SOAP_ENCODING_NS = "http://schemas.xmlsoap.org/soap/encoding/"

# Namespaces whose types are atomic values even though no schema defines them
_BUILTIN_NAMESPACES = {constants.XSD_NS, SOAP_ENCODING_NS}


def _clark(namespace: str | None, local: str) -> str:
    return f"{{{namespace}}}{local}" if namespace else local


def _local_name(qname: str) -> str:
    return qname.rpartition("}")[2]


def _namespace(qname: str) -> str | None:
    return qname[1:].partition("}")[0] if qname.startswith("{") else None


def _resolve_qname(el: etree._Element, value: str) -> str:
    """Turn a ``prefix:local`` attribute value into Clark notation using *el*'s scope."""
    prefix, _, local = value.strip().rpartition(":")
    return _clark(el.nsmap.get(prefix or None), local)


def _xsd_local(el) -> str | None:
    """Local name of an XSD element, None for comments and foreign elements."""
    if not isinstance(el.tag, str):
        return None
    qname = etree.QName(el)
    if qname.namespace != constants.XSD_NS:
        return None
    return qname.localname


def _xml_parser(allow_network: bool) -> etree.XMLParser:
    return etree.XMLParser(
        resolve_entities=False,
        no_network=not allow_network,
        remove_comments=True,
    )


# ── Schema index ──────────────────────────────────────────────────────────

class _SchemaIndex:
    """Global XSD components of every schema reachable from ``wsdl:types``."""

    KINDS = ("element", "complexType", "simpleType", "group", "attributeGroup", "attribute")

    def __init__(self, allow_network: bool = False):
        self.allow_network = allow_network
        self._defs: dict[str, dict[str, etree._Element]] = {k: {} for k in self.KINDS}
        self._by_local: dict[str, dict[str, list[str]]] = {k: {} for k in self.KINDS}
        self._loaded: set[str] = set()

    def add_schema(
        self,
        schema_el: etree._Element,
        base_dir: Path | None,
        default_tns: str | None = None,
    ) -> None:
        tns = schema_el.get("targetNamespace") or default_tns
        for child in schema_el:
            local = _xsd_local(child)
            if local in ("import", "include"):
                self._load_external(child.get("schemaLocation"), base_dir, tns if local == "include" else None)
            elif local in self._defs and child.get("name"):
                key = _clark(tns, child.get("name"))
                self._defs[local][key] = child
                self._by_local[local].setdefault(child.get("name"), []).append(key)

    def _load_external(self, location: str | None, base_dir: Path | None, tns: str | None) -> None:
        if not location:
            return
        is_remote = location.startswith(("http://", "https://"))
        if is_remote:
            if not self.allow_network:
                logger.warning(f"Skipping remote schema {location} (network access disabled)")
                return
            source = location
        else:
            path = Path(location)
            if not path.is_absolute() and base_dir is not None:
                path = base_dir / path
            if not path.exists():
                logger.warning(f"Imported schema not found: {path}")
                return
            source = str(path.resolve())
        if source in self._loaded:
            return
        self._loaded.add(source)
        try:
            tree = etree.parse(source, parser=_xml_parser(self.allow_network))
        except (OSError, etree.XMLSyntaxError) as e:
            logger.warning(f"Could not load imported schema {source}: {e}")
            return
        schema_root = tree.getroot()
        if _xsd_local(schema_root) != "schema":
            logger.warning(f"{source} is not an XML schema, ignored")
            return
        next_base = base_dir if is_remote else Path(source).parent
        self.add_schema(schema_root, next_base, tns)

    def find(self, kind: str, qname: str) -> etree._Element | None:
        found = self._defs[kind].get(qname)
        if found is not None:
            return found
        # Loose fallback for documents with sloppy prefixes: a unique local name
        candidates = self._by_local[kind].get(_local_name(qname), [])
        if len(candidates) == 1:
            return self._defs[kind][candidates[0]]
        return None

    @staticmethod
    def is_builtin(qname: str) -> bool:
        return _namespace(qname) in _BUILTIN_NAMESPACES


# ── Tree construction ─────────────────────────────────────────────────────

@dataclass(frozen=True)
class _Part:
    name: str
    element: str | None = None
    type: str | None = None


class _TreeBuilder:
    """
    Resolves message parts through the schema into ParamNode trees.

    A named type or global element may appear once on any root-to-leaf path;
    a recurrence, or a node at ``max_depth``, becomes a simple leaf.
    """

    def __init__(self, schemas: _SchemaIndex, max_depth: int):
        self.schemas = schemas
        self.max_depth = max_depth

    def message_tree(self, message_name: str, parts: list[_Part]) -> ParamNode:
        if len(parts) == 1 and parts[0].element:
            node = self.global_element(parts[0].element, depth=1)
            if not node.is_leaf:
                # document/literal wrapper element is the root
                return node
            return ParamNode.complex(message_name, [node])

        nodes = []
        for part in parts:
            if part.element:
                nodes.append(self.global_element(part.element, depth=2))
            elif part.type:
                nodes.append(self.typed_node(part.name, part.type, depth=2, seen=frozenset()))
            else:
                nodes.append(ParamNode.leaf(part.name))
        return ParamNode.complex(message_name, nodes)

    def global_element(self, qname: str, depth: int) -> ParamNode:
        el = self.schemas.find("element", qname)
        if el is None:
            raise UnresolvableTypeRef(qname)
        return self.element_node(el, depth, frozenset({"element:" + qname}))

    def element_node(self, el, depth: int, seen: frozenset[str]) -> ParamNode | None:
        ref = el.get("ref")
        if ref is not None:
            qname = _resolve_qname(el, ref)
            target = self.schemas.find("element", qname)
            if target is None:
                raise UnresolvableTypeRef(qname)
            key = "element:" + qname
            if key in seen:
                return ParamNode.leaf(target.get("name", _local_name(qname)))
            el, seen = target, seen | {key}

        name = el.get("name")
        if not name:
            return None
        if depth >= self.max_depth:
            return ParamNode.leaf(name)

        type_attr = el.get("type")
        if type_attr:
            return self.typed_node(name, _resolve_qname(el, type_attr), depth, seen)

        inline = el.find(f"{XSD}complexType")
        if inline is not None:
            children = self._complex_children(inline, depth + 1, seen)
            return ParamNode.complex(name, children) if children else ParamNode.leaf(name)

        # inline simpleType, untyped element or unsupported content
        return ParamNode.leaf(name)

    def typed_node(self, name: str, type_qname: str, depth: int, seen: frozenset[str]) -> ParamNode:
        if self.schemas.is_builtin(type_qname) or depth >= self.max_depth:
            return ParamNode.leaf(name)

        complex_type = self.schemas.find("complexType", type_qname)
        if complex_type is not None:
            key = "type:" + type_qname
            if key in seen:
                logger.debug(f"Recursive type {type_qname} truncated at {name}")
                return ParamNode.leaf(name)
            children = self._complex_children(complex_type, depth + 1, seen | {key})
            return ParamNode.complex(name, children) if children else ParamNode.leaf(name)

        if self.schemas.find("simpleType", type_qname) is not None:
            return ParamNode.leaf(name)
        raise UnresolvableTypeRef(type_qname)

    def _complex_children(self, container, depth: int, seen: frozenset[str]) -> list[ParamNode]:
        """Children of a complexType (or of an extension/restriction inside one)."""
        children: list[ParamNode] = []
        for child in container:
            local = _xsd_local(child)
            if local in ("sequence", "all", "choice"):
                children.extend(self._particle_children(child, depth, seen))
            elif local == "group":
                children.extend(self._group_children(child, depth, seen))
            elif local == "attribute":
                node = self._attribute_node(child)
                if node is not None:
                    children.append(node)
            elif local == "attributeGroup":
                children.extend(self._attribute_group(child, seen))
            elif local in ("complexContent", "simpleContent"):
                for derivation in child:
                    kind = _xsd_local(derivation)
                    if kind not in ("extension", "restriction"):
                        continue
                    if kind == "extension" and derivation.get("base"):
                        children.extend(self._base_children(derivation, depth, seen))
                    children.extend(self._complex_children(derivation, depth, seen))
        return children

    def _base_children(self, derivation, depth: int, seen: frozenset[str]) -> list[ParamNode]:
        base = _resolve_qname(derivation, derivation.get("base"))
        if self.schemas.is_builtin(base) or self.schemas.find("simpleType", base) is not None:
            return []
        base_type = self.schemas.find("complexType", base)
        if base_type is None:
            raise UnresolvableTypeRef(base)
        key = "type:" + base
        if key in seen:
            return []
        return self._complex_children(base_type, depth, seen | {key})

    def _particle_children(self, container, depth: int, seen: frozenset[str]) -> list[ParamNode]:
        children: list[ParamNode] = []
        for child in container:
            local = _xsd_local(child)
            if local == "element":
                node = self.element_node(child, depth, seen)
                if node is not None:
                    children.append(node)
            elif local in ("sequence", "all", "choice"):
                # choice branches are unioned
                children.extend(self._particle_children(child, depth, seen))
            elif local == "group":
                children.extend(self._group_children(child, depth, seen))
        return children

    def _group_children(self, group_ref, depth: int, seen: frozenset[str]) -> list[ParamNode]:
        ref = group_ref.get("ref")
        if ref is None:
            return self._particle_children(group_ref, depth, seen)
        qname = _resolve_qname(group_ref, ref)
        group = self.schemas.find("group", qname)
        if group is None:
            raise UnresolvableTypeRef(qname)
        key = "group:" + qname
        if key in seen:
            return []
        return self._particle_children(group, depth, seen | {key})

    def _attribute_node(self, attr) -> ParamNode | None:
        if attr.get("use") == "prohibited":
            return None
        if attr.get("name"):
            return ParamNode.leaf(attr.get("name"))
        ref = attr.get("ref")
        if ref and self.schemas.find("attribute", _resolve_qname(attr, ref)) is not None:
            return ParamNode.leaf(_local_name(_resolve_qname(attr, ref)))
        # soapenc:arrayType, xml:lang and the like carry no parameter name
        return None

    def _attribute_group(self, group_ref, seen: frozenset[str]) -> list[ParamNode]:
        ref = group_ref.get("ref")
        if ref is None:
            return []
        qname = _resolve_qname(group_ref, ref)
        group = self.schemas.find("attributeGroup", qname)
        if group is None:
            raise UnresolvableTypeRef(qname)
        key = "attributeGroup:" + qname
        if key in seen:
            return []
        nodes = []
        for child in group:
            local = _xsd_local(child)
            if local == "attribute":
                node = self._attribute_node(child)
                if node is not None:
                    nodes.append(node)
            elif local == "attributeGroup":
                nodes.extend(self._attribute_group(child, seen | {key}))
        return nodes


# ── Public API ────────────────────────────────────────────────────────────

def _read_messages(root: etree._Element) -> dict[str, list[_Part]]:
    messages: dict[str, list[_Part]] = {}
    for message in root.iterfind(f"{WSDL}message"):
        parts = []
        for part in message.iterfind(f"{WSDL}part"):
            element = part.get("element")
            type_ = part.get("type")
            parts.append(_Part(
                name=part.get("name", ""),
                element=_resolve_qname(part, element) if element else None,
                type=_resolve_qname(part, type_) if type_ else None,
            ))
        messages[message.get("name", "")] = parts
    return messages


def _side_tree(io_el, messages: dict[str, list[_Part]], builder: _TreeBuilder) -> ParamNode:
    if io_el is None or not io_el.get("message"):
        return ParamNode.empty()
    message_name = _local_name(_resolve_qname(io_el, io_el.get("message")))
    parts = messages.get(message_name)
    if parts is None:
        logger.warning(f"Message {message_name} is not defined; treated as empty")
        return ParamNode.empty(message_name)
    return builder.message_tree(message_name, parts)


def _service_name(root: etree._Element, source_uri: str) -> str:
    if root.get("name"):
        return root.get("name")
    service = root.find(f"{WSDL}service")
    if service is not None and service.get("name"):
        return service.get("name")
    if source_uri:
        return Path(source_uri).stem
    return "service"


def parse_wsdl(
    document: bytes | BinaryIO,
    source_uri: str = "",
    *,
    max_depth: int = constants.DEFAULT_MAX_DEPTH,
    base_dir: str | Path | None = None,
    allow_network: bool = False,
) -> ServiceDescription:
    """
    Reduce a WSDL 1.1 document to its operations and parameter trees.

    Args:
        document: Raw XML bytes or a binary stream
        source_uri: Where the document came from (kept on the result)
        max_depth: Deepest level a parameter tree may reach
        base_dir: Folder used to resolve relative schemaLocation imports
        allow_network: Permit fetching remote imported schemas

    Returns:
        ServiceDescription with at least one operation

    Raises:
        MalformedXml, NotWsdl, NoOperations, UnresolvableTypeRef
    """
    data = document if isinstance(document, (bytes, bytearray)) else document.read()
    label = source_uri or "<document>"
    try:
        root = etree.fromstring(bytes(data), parser=_xml_parser(allow_network))
    except etree.XMLSyntaxError as e:
        raise MalformedXml(f"{label}: {e}") from e

    if root.tag != f"{WSDL}definitions":
        raise NotWsdl(f"{label}: root element is {root.tag}, expected wsdl:definitions")

    base = Path(base_dir) if base_dir is not None else None
    schemas = _SchemaIndex(allow_network)
    for schema_el in root.iterfind(f"{WSDL}types/{XSD}schema"):
        schemas.add_schema(schema_el, base)

    messages = _read_messages(root)
    builder = _TreeBuilder(schemas, max_depth)

    operations: list[OperationDef] = []
    for port_type in root.iterfind(f"{WSDL}portType"):
        for op_el in port_type.iterfind(f"{WSDL}operation"):
            operations.append(OperationDef(
                name=op_el.get("name", ""),
                input=_side_tree(op_el.find(f"{WSDL}input"), messages, builder),
                output=_side_tree(op_el.find(f"{WSDL}output"), messages, builder),
            ))

    if not operations:
        raise NoOperations(f"{label}: no portType operations found")

    service = ServiceDescription(
        name=_service_name(root, source_uri),
        operations=tuple(operations),
        source_uri=source_uri,
    )
    logger.info(f"Parsed {service.name}: {len(operations)} operations, {service.leaf_count()} parameter leaves")
    return service


def parse_wsdl_file(path: str | Path, **kwargs) -> ServiceDescription:
    """Parse a WSDL file; relative schema imports resolve against its folder."""
    path = Path(path)
    kwargs.setdefault("base_dir", path.parent)
    return parse_wsdl(path.read_bytes(), source_uri=str(path), **kwargs)
