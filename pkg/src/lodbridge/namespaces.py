"""Well-known vocabulary IRIs used across the toolkit."""

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
VOID_NS = "http://rdfs.org/ns/void#"
DCTERMS_NS = "http://purl.org/dc/terms/"

RDF_TYPE = RDF_NS + "type"
RDF_LANGSTRING = RDF_NS + "langString"
RDFS_LABEL = RDFS_NS + "label"

XSD_STRING = XSD_NS + "string"
XSD_INTEGER = XSD_NS + "integer"
XSD_DECIMAL = XSD_NS + "decimal"
XSD_DATE = XSD_NS + "date"

OWL_SAMEAS = OWL_NS + "sameAs"

VOID_DATASET = VOID_NS + "Dataset"
VOID_LINKSET = VOID_NS + "Linkset"
VOID_TRIPLES = VOID_NS + "triples"
VOID_DISTINCT_SUBJECTS = VOID_NS + "distinctSubjects"
VOID_DISTINCT_OBJECTS = VOID_NS + "distinctObjects"
VOID_CLASS_PARTITION = VOID_NS + "classPartition"
VOID_CLASS = VOID_NS + "class"
VOID_ENTITIES = VOID_NS + "entities"
VOID_PROPERTY_PARTITION = VOID_NS + "propertyPartition"
VOID_PROPERTY = VOID_NS + "property"
VOID_LINK_PREDICATE = VOID_NS + "linkPredicate"
VOID_SUBJECTS_TARGET = VOID_NS + "subjectsTarget"
VOID_OBJECTS_TARGET = VOID_NS + "objectsTarget"
VOID_SUBSET = VOID_NS + "subset"

DCTERMS_LICENSE = DCTERMS_NS + "license"

#: Default prefix declarations for human-facing Turtle output.
COMMON_PREFIXES = {
    "rdf": RDF_NS,
    "rdfs": RDFS_NS,
    "xsd": XSD_NS,
    "owl": OWL_NS,
    "void": VOID_NS,
    "dcterms": DCTERMS_NS,
}
