package examples;

import java.util.Set;
import javax.annotation.processing.AbstractProcessor;
import javax.annotation.processing.RoundEnvironment;
import javax.annotation.processing.SupportedAnnotationTypes;
import javax.annotation.processing.SupportedSourceVersion;
import javax.lang.model.SourceVersion;
import javax.lang.model.element.Element;
import javax.lang.model.element.ElementKind;
import javax.lang.model.element.Modifier;
import javax.lang.model.element.TypeElement;
import javax.tools.Diagnostic.Kind;

@SupportedAnnotationTypes("examples.Person")
@SupportedSourceVersion(SourceVersion.RELEASE_6)
public class PersonForbidProcessor extends AbstractProcessor {

    @Override
    public boolean process(Set<? extends TypeElement> annotations,
                           RoundEnvironment objects) {
        // iterate over all objects to check
        for (Element elt : objects.getElementsAnnotatedWith(Person.class)) {
            if (!isPlacementValid(elt)) {
                this.processingEnv.getMessager().printMessage(
                    Kind.ERROR,
                    "The annotation @Person is disallowed for this location.",
                    elt);
            }
        }
        return true;
    }

    private boolean isPlacementValid(Element elt) {
        if (!check_at_class__forbid_final_field(elt)) {
            return false;
        }
        return true;
    }

    // check: at_class__forbid_final_field
    // Person forbids a final field in the annotated class
    private boolean check_at_class__forbid_final_field(Element elt) {
        if (elt.getKind() != ElementKind.CLASS) {
            return true;
        }
        boolean atom0 = false;
        for (Element member : elt.getEnclosedElements()) {
            if (member.getKind() == ElementKind.FIELD
                && isFinal(member)) {
                atom0 = true;
            }
        }
        return !(atom0);
    }

    private static boolean isFinal(Element e) {
        if (e.getKind() == ElementKind.INTERFACE
            || e.getKind() == ElementKind.ANNOTATION_TYPE) {
            return false;
        }
        return e.getModifiers().contains(Modifier.FINAL);
    }
}
