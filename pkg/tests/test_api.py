from app.services.graph_service import GraphService
from app.services.serialization_service import SerializationService


def test_get_graph_json(client):
    response = client.get('/graphs/16/gamma')
    assert response.status_code == 200
    data = response.get_json()
    assert data['family'] == 'gamma'
    assert data['vertices'] == [2, 4, 6, 8, 10, 12, 14]
    assert len(data['edges']) == 7


def test_get_graph_dot(client):
    response = client.get('/graphs/16/gamma?format=dot')
    assert response.status_code == 200
    assert response.mimetype == 'text/vnd.graphviz'
    assert '  8 -- 10;' in response.get_data(as_text=True).splitlines()


def test_get_graph_rejects_bad_input(client):
    assert client.get('/graphs/16/petersen').status_code == 400
    assert client.get('/graphs/16/gamma?format=png').status_code == 400
    assert client.get('/graphs/1/gamma').status_code == 400


def test_construction_exists(client):
    data = client.get('/constructions/30/gamma').get_json()
    assert data['kind'] == 'Exists'
    assert data['source'] == 'Thm2_1_Squarefree'
    assert data['partition']['R'] == [5, 10, 15, 20, 25]
    assert data['verdict'] == 'VeryCostEffective'


def test_construction_not_vce(client):
    data = client.get('/constructions/12/omega').get_json()
    assert data['kind'] == 'NotVce'
    assert data['witness'] == 'isolated-vertex'
    assert data['witness_vertex'] == 2

    data = client.get('/constructions/36/nilradical').get_json()
    assert data['witness'] == 'exhausted-search'
    assert data['partitions_examined'] == 15


def test_construction_of_empty_graph(client):
    response = client.get('/constructions/7/gamma')
    assert response.status_code == 422
    assert 'message' in response.get_json()
    assert client.get('/constructions/30/gamma?cap=abc').status_code == 400


def test_check_partition(client):
    graph = SerializationService.graph_to_document(GraphService.gamma(15), 15, 'gamma')
    response = client.post('/checks/', json={'graph': graph, 'partition': {'R': [3, 6, 9, 12], 'B': [5, 10]}})
    assert response.status_code == 200
    data = response.get_json()
    assert data['verdict'] == 'VeryCostEffective'
    assert data['witnesses'] == []
    assert {'vertex': 5, 'inside': 0, 'outside': 4, 'verdict': 'VeryCostEffective'} in data['tallies']

    response = client.post('/checks/', json={'graph': graph, 'partition': {'R': [3, 5, 6, 9, 12], 'B': [10]}})
    assert 5 in response.get_json()['witnesses']


def test_check_rejects_bad_partition(client):
    graph = SerializationService.graph_to_document(GraphService.gamma(15), 15, 'gamma')
    response = client.post('/checks/', json={'graph': graph, 'partition': {'R': [3, 3], 'B': [5]}})
    assert response.status_code == 400
    assert client.post('/checks/', json={'graph': graph}).status_code == 400


def test_search(client):
    data = client.get('/searches/15/gamma?method=local&seed=1').get_json()
    assert data['status'] == 'Found'
    assert sorted(data['partition']['R'] + data['partition']['B']) == [3, 5, 6, 9, 10, 12]

    data = client.get('/searches/36/nilradical').get_json()
    assert data['status'] == 'NoneExists'
    assert client.get('/searches/15/gamma?method=annealing').status_code == 400


def test_survey(client):
    response = client.get('/surveys/?n_min=6&n_max=12&family=gamma&family=omega')
    assert response.status_code == 200
    rows = response.get_json()['rows']
    assert len(rows) == 7 * 2
    assert [(row['n'], row['family']) for row in rows[:2]] == [(6, 'gamma'), (6, 'omega')]
    assert {'n': 12, 'family': 'omega', 'shape': 'p^2q', 'vertices': 6,
            'verdict': 'Not-VCE(isolated-vertex)', 'source': '2'} in rows


def test_survey_rejects_bad_ranges(client):
    assert client.get('/surveys/?n_min=12&n_max=6').status_code == 400
    assert client.get('/surveys/?n_min=2&n_max=500').status_code == 400
    assert client.get('/surveys/?n_max=6').status_code == 400
