package annotations;

import java.util.Set;
import javax.annotation.processing.AbstractProcessor;
import javax.annotation.processing.RoundEnvironment;
import javax.annotation.processing.SupportedAnnotationTypes;
import javax.annotation.processing.SupportedSourceVersion;
import javax.lang.model.SourceVersion;
import javax.lang.model.element.AnnotationMirror;
import javax.lang.model.element.Element;
import javax.lang.model.element.ElementKind;
import javax.lang.model.element.Modifier;
import javax.lang.model.element.TypeElement;
import javax.tools.Diagnostic.Kind;

@SupportedAnnotationTypes("annotations.EmbeddedId")
@SupportedSourceVersion(SourceVersion.RELEASE_6)
public class EmbeddedIdRequireProcessor extends AbstractProcessor {

    @Override
    public boolean process(Set<? extends TypeElement> annotations,
                           RoundEnvironment objects) {
        // iterate over all objects to check
        for (Element elt : objects.getElementsAnnotatedWith(EmbeddedId.class)) {
            if (!isPlacementValid(elt)) {
                this.processingEnv.getMessager().printMessage(
                    Kind.ERROR,
                    "The annotation @EmbeddedId is disallowed for this location.",
                    elt);
            }
        }
        return true;
    }

    private boolean isPlacementValid(Element elt) {
        if (!check_require_method_or_field(elt)) {
            return false;
        }
        if (!check_at_field__require_annEntity_class(elt)) {
            return false;
        }
        if (!check_at_method__require_annEntity_class(elt)) {
            return false;
        }
        return true;
    }

    // check: require_method_or_field
    // EmbeddedId requires the annotated element to be a method or the annotated element to be a field
    private boolean check_require_method_or_field(Element elt) {
        if (!(elt.getKind() == ElementKind.METHOD
              || elt.getKind() == ElementKind.FIELD)) {
            return true;
        }
        boolean atom0 = elt.getKind() == ElementKind.METHOD;
        boolean atom1 = elt.getKind() == ElementKind.FIELD;
        return atom0 || atom1;
    }

    // check: at_field__require_annEntity_class
    // EmbeddedId requires the type enclosing the annotated field to be a class annotated @Entity
    private boolean check_at_field__require_annEntity_class(Element elt) {
        if (elt.getKind() != ElementKind.FIELD) {
            return true;
        }
        Element owner0 = elt.getEnclosingElement();
        boolean atom0 = owner0 != null
                && owner0.getKind() == ElementKind.CLASS
                && hasAnnotation(owner0, "annotations.Entity");
        return atom0;
    }

    // check: at_method__require_annEntity_class
    // EmbeddedId requires the type enclosing the annotated method to be a class annotated @Entity
    private boolean check_at_method__require_annEntity_class(Element elt) {
        if (elt.getKind() != ElementKind.METHOD) {
            return true;
        }
        Element owner0 = elt.getEnclosingElement();
        boolean atom0 = owner0 != null
                && owner0.getKind() == ElementKind.CLASS
                && hasAnnotation(owner0, "annotations.Entity");
        return atom0;
    }

    private static boolean hasAnnotation(Element e, String name) {
        for (AnnotationMirror mirror : e.getAnnotationMirrors()) {
            TypeElement type = (TypeElement) mirror.getAnnotationType().asElement();
            if (type.getQualifiedName().contentEquals(name)) {
                return true;
            }
        }
        return false;
    }
}
