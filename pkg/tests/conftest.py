import json

import pytest
from fastapi.testclient import TestClient

from writegate.gateway import MockProvider
from writegate.personas import load_pedagogy_guide
from writegate.service import ServiceConfig, create_app, packaged_guide_path

REVIEWER2_QUESTIONS = {
    "claim_question": "What evidence would carry the weight of your central claim?",
    "reasoning_question": "How does your evidence connect to the conclusion you draw?",
    "counterargument_question": "What would the strongest opposing view say here?",
    "scope_or_implication_question": "Under which conditions would your claim stop holding?",
}

CONFUSED_READER_QUESTIONS = {
    "clarification_question": "What does this key term mean, in plain words?",
    "co_construction_question": "What other explanations could account for the same evidence?",
}


def fenced(obj: dict) -> str:
    """Render an object the way a well-behaved provider would."""
    return "```json\n" + json.dumps(obj) + "\n```"


@pytest.fixture(scope="session")
def guide():
    return load_pedagogy_guide(packaged_guide_path())


@pytest.fixture()
def make_client():
    """Factory for (TestClient, MockProvider) pairs with a fresh app each."""

    def _make(env_key="env-key", mock=None, **config_kwargs):
        mock = mock if mock is not None else MockProvider()
        config = ServiceConfig(
            guide_path=packaged_guide_path(), env_key=env_key, **config_kwargs
        )
        client = TestClient(create_app(config, provider=mock))
        return client, mock

    return _make
