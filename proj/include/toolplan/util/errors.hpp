#pragma once

#include <stdexcept>
#include <string>

namespace toolplan {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A joint value lies outside its configured interval.
class LimitViolation : public Error {
public:
    explicit LimitViolation(const std::string& msg) : Error(msg) {}
};

/// Requested jaw opening exceeds the gripper stroke.
class StrokeExceeded : public Error {
public:
    explicit StrokeExceeded(const std::string& msg) : Error(msg) {}
};

/// Shape kind not supported by the requested operation.
class UnsupportedShape : public Error {
public:
    explicit UnsupportedShape(const std::string& msg) : Error(msg) {}
};

/// No suction pose admits the pad on any facet.
class NoPoses : public Error {
public:
    explicit NoPoses(const std::string& msg) : Error(msg) {}
};

/// Grasp sampling discarded every candidate.
class NoGrasps : public Error {
public:
    explicit NoGrasps(const std::string& msg) : Error(msg) {}
};

/// No feasible handover pair exists for the sampled region.
class NoPairs : public Error {
public:
    explicit NoPairs(const std::string& msg) : Error(msg) {}
};

/// A regrasp-graph layer was supplied empty.
class EmptyLayer : public Error {
public:
    explicit EmptyLayer(const std::string& msg) : Error(msg) {}
};

/// Edge id not present among the live edges of a graph.
class UnknownEdge : public Error {
public:
    explicit UnknownEdge(const std::string& msg) : Error(msg) {}
};

/// Filesystem-level failure (open/read/write).
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

/// Structurally broken file content (bad JSON, wrong header, unordered data).
class FormatError : public Error {
public:
    explicit FormatError(const std::string& msg) : Error(msg) {}
};

/// Well-formed file that does not match the expected schema; message names the field.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

/// Semantically invalid content (interpenetration, floating object, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Requested render time outside the trajectory span.
class TimeOutOfRange : public Error {
public:
    explicit TimeOutOfRange(const std::string& msg) : Error(msg) {}
};

} // namespace toolplan
