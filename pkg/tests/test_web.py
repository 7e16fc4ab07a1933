import pytest
from fastapi.testclient import TestClient

from src.identities.catalog import CATALOG
from web.app import app


@pytest.fixture
def client():
    return TestClient(app)


def test_health(client):
    response = client.get('/health')
    assert response.status_code == 200
    assert response.json() == {'status': 'healthy', 'identities': len(CATALOG)}


def test_identities(client):
    body = client.get('/identities').json()
    assert [entry['id'] for entry in body] == [row.tag for row in CATALOG]


def test_identities_filtered(client):
    body = client.get('/identities', params={'tag': 'ot_*'}).json()
    assert [entry['id'] for entry in body] == ['ot_sq', 'ot_oct']


def test_unknown_tag_is_404(client):
    assert client.get('/identities', params={'tag': 'nope'}).status_code == 404


def test_catalog_page(client):
    response = client.get('/')
    assert response.status_code == 200
    assert 'mhd_sq' in response.text


def test_count_table(client):
    response = client.get('/count/squares/4', params={'nmax': 5})
    assert response.status_code == 200
    assert [row['oracle'] for row in response.json()] == [8, 24, 32, 24, 48]


def test_count_with_formula(client):
    rows = client.get('/count/squares/8', params={'nmax': 4, 'using': 's8'}).json()
    assert all(row['match'] for row in rows)


def test_count_rejects_mismatched_formula(client):
    assert client.get('/count/squares/4', params={'using': 't4'}).status_code == 422


def test_verify(client):
    response = client.post('/verify', json={'ids': ['mhd_sq'], 'm': 1, 'order': 8})
    assert response.status_code == 200
    [report] = response.json()
    assert report['id'] == 'mhd_sq'
    assert report['params'] == {'m': 1, 'order': 8}
    assert report['status'] == 'pass'


def test_verify_points(client):
    response = client.post('/verify', json={'ids': ['op'], 'points': ['1', '2', '1/3'], 'order': 6})
    assert response.status_code == 200
    assert response.json()[0]['params']['points'] == ['1/1', '2/1', '1/3']


def test_verify_errors(client):
    assert client.post('/verify', json={'ids': ['missing']}).status_code == 404
    assert client.post('/verify', json={'ids': ['mhd_sq'], 'm': 7}).status_code == 422
    assert client.post('/verify', json={'ids': []}).status_code == 422
