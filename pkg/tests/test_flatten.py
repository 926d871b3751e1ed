from src.wsdl import FlattenedParamSet, ParamNode, flatten

leaf = ParamNode.leaf
node = ParamNode.complex


def test_single_leaf():
    tree = node("E", [leaf("temperature")])
    assert flatten(tree).sentences == (("temperature",),)


def test_paths_are_concatenated_and_split():
    tree = node("E", [node("address", [leaf("street"), leaf("zipCode")])])
    assert flatten(tree).sentences == (("address", "street"), ("address", "zip", "code"))


def test_root_name_is_excluded():
    tree = node("GetWeatherSoapIn", [leaf("city")])
    assert flatten(tree).sentences == (("city",),)


def test_empty_tree():
    result = flatten(ParamNode.empty("Request"))
    assert result == FlattenedParamSet()
    assert len(result) == 0
    assert not result


def test_one_sentence_per_leaf():
    tree = node("E", [
        leaf("id"),
        node("customer", [leaf("firstName"), node("address", [leaf("city"), leaf("country")])]),
        leaf("total"),
    ])
    result = flatten(tree)
    assert len(result) == sum(1 for _ in tree.leaves())
    assert result.sentences[2] == ("customer", "address", "city")
    assert list(result.tokens())[:3] == ["id", "customer", "first"]


def test_leaf_without_word_tokens_is_skipped():
    tree = node("E", [leaf("__"), leaf("amount")])
    assert flatten(tree).sentences == (("amount",),)


def test_custom_tokenizer():
    tree = node("E", [node("Address", [leaf("ZIP")])])
    assert flatten(tree, tokenizer=lambda s: [s]).sentences == (("Address", "ZIP"),)


def test_deterministic():
    tree = node("E", [node("a", [leaf("b"), leaf("c")]), leaf("d")])
    assert flatten(tree) == flatten(tree)


def test_non_ascii_leaves_are_kept():
    tree = node("E", [leaf("名前"), leaf("city"), leaf("café")])
    result = flatten(tree)
    assert len(result) == 3
    assert result.sentences == (("名前",), ("city",), ("café",))
